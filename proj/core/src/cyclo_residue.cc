#include "subsum/cyclo_residue.h"

#include <ostream>
#include <stdexcept>

#include "subsum/cyclotomic.h"

namespace subsum {

namespace {

// Remainder of coeffs modulo the monic Phi_m, as exactly phi(m) entries.
std::vector<BigInt> reduce(std::int64_t m, std::vector<BigInt> work) {
  const DensePoly& phi = cyclotomic(m);
  const auto dphi = static_cast<std::size_t>(phi.degree());
  for (std::size_t k = work.size(); k-- > dphi;) {
    if (work[k] == 0) continue;
    const BigInt top = work[k];
    const std::size_t shift = k - dphi;
    for (std::size_t j = 0; j <= dphi; ++j) {
      mpz_submul(work[shift + j].get_mpz_t(), top.get_mpz_t(), phi.coeffs()[j].get_mpz_t());
    }
  }
  work.resize(dphi, 0);
  return work;
}

}  // namespace

CycloResidue::CycloResidue(std::int64_t modulus_index, std::span<const BigInt> coeffs) : m_(modulus_index) {
  if (m_ < 1) throw std::domain_error("cyclotomic modulus index must be >= 1");
  // Fold modulo x^m - 1 first: Phi_m divides x^m - 1.
  std::vector<BigInt> folded(static_cast<std::size_t>(m_), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) folded[k % static_cast<std::size_t>(m_)] += coeffs[k];
  coeffs_ = reduce(m_, std::move(folded));
}

CycloResidue CycloResidue::constant(std::int64_t modulus_index, const BigInt& value) {
  std::vector<BigInt> c{value};
  return CycloResidue(modulus_index, c);
}

CycloResidue CycloResidue::root_power(std::int64_t modulus_index, std::int64_t k) {
  if (modulus_index < 1) throw std::domain_error("cyclotomic modulus index must be >= 1");
  std::int64_t e = k % modulus_index;
  if (e < 0) e += modulus_index;
  std::vector<BigInt> c(static_cast<std::size_t>(e) + 1, 0);
  c.back() = 1;
  return CycloResidue(modulus_index, c);
}

bool CycloResidue::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::string CycloResidue::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out += ',';
    out += coeffs_[k].get_str();
  }
  return out + "] mod Phi_" + std::to_string(m_);
}

std::ostream& operator<<(std::ostream& os, const CycloResidue& r) { return os << r.to_string(); }

CycloResidue reduce_mod_cyclotomic(const DensePoly& p, std::int64_t m) { return CycloResidue(m, p.coeffs()); }

namespace {

void require_same_modulus(const CycloResidue& a, const CycloResidue& b) {
  if (a.modulus_index() != b.modulus_index()) {
    throw std::invalid_argument("residues live modulo different cyclotomic polynomials");
  }
}

}  // namespace

CycloResidue residue_mul(const CycloResidue& a, const CycloResidue& b) {
  require_same_modulus(a, b);
  DensePoly pa(std::vector<BigInt>(a.coeffs().begin(), a.coeffs().end()));
  DensePoly pb(std::vector<BigInt>(b.coeffs().begin(), b.coeffs().end()));
  return reduce_mod_cyclotomic(poly_mul(pa, pb), a.modulus_index());
}

CycloResidue residue_add(const CycloResidue& a, const CycloResidue& b) {
  require_same_modulus(a, b);
  std::vector<BigInt> sum(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += b.coeffs()[k];
  return CycloResidue(a.modulus_index(), sum);
}

CycloResidue residue_sub(const CycloResidue& a, const CycloResidue& b) {
  require_same_modulus(a, b);
  std::vector<BigInt> diff(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= b.coeffs()[k];
  return CycloResidue(a.modulus_index(), diff);
}

CycloResidue residue_scale(const CycloResidue& a, const BigInt& k) {
  std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c *= k;
  return CycloResidue(a.modulus_index(), out);
}

bool abs_squared_supported(std::int64_t m) { return m == 1 || m == 2 || m == 3 || m == 4 || m == 6; }

BigInt abs_squared_at_root(const CycloResidue& r) {
  const auto m = r.modulus_index();
  if (!abs_squared_supported(m)) {
    throw std::invalid_argument("|z|^2 is not a rational integer readout for Phi_" + std::to_string(m));
  }
  const BigInt& a = r.coeffs()[0];
  if (m == 1 || m == 2) return a * a;
  const BigInt& b = r.coeffs()[1];
  if (m == 4) return a * a + b * b;
  // zeta_6 = 1/2 + i sqrt(3)/2 and zeta_3 = -1/2 + i sqrt(3)/2.
  if (m == 6) return a * a + a * b + b * b;
  return a * a - a * b + b * b;
}

}  // namespace subsum
