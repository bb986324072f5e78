#include "subsum/poly.h"

#include <algorithm>
#include <ostream>
#include <utility>

namespace subsum {

DensePoly::DensePoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

DensePoly::DensePoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

DensePoly DensePoly::constant(const BigInt& c) { return DensePoly(std::vector<BigInt>{c}); }

DensePoly DensePoly::monomial(std::size_t k, const BigInt& c) {
  std::vector<BigInt> coeffs(k + 1, 0);
  coeffs[k] = c;
  return DensePoly(std::move(coeffs));
}

DensePoly DensePoly::binomial(std::size_t i) {
  std::vector<BigInt> coeffs(i + 1, 0);
  coeffs[0] += 1;
  coeffs[i] += 1;
  return DensePoly(std::move(coeffs));
}

void DensePoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt DensePoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

const BigInt& DensePoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

DensePoly& DensePoly::operator+=(const DensePoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

DensePoly& DensePoly::operator*=(const DensePoly& other) {
  *this = poly_mul(*this, other);
  return *this;
}

DensePoly& DensePoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

DensePoly& DensePoly::mul_binomial(std::size_t i, std::int64_t times) {
  if (i == 0) {
    *this *= pow2(static_cast<std::uint64_t>(times));
    return *this;
  }
  if (coeffs_.empty()) return *this;
  for (std::int64_t t = 0; t < times; ++t) {
    const std::size_t old = coeffs_.size();
    coeffs_.resize(old + i, 0);
    for (std::size_t k = old; k-- > 0;) {
      if (coeffs_[k] != 0) coeffs_[k + i] += coeffs_[k];
    }
  }
  return *this;
}

DensePoly& DensePoly::div_binomial(std::size_t i, std::int64_t times) {
  if (i == 0) throw std::invalid_argument("div_binomial needs i >= 1");
  for (std::int64_t t = 0; t < times; ++t) {
    if (coeffs_.empty()) return *this;
    if (coeffs_.size() <= i) throw NonDivisibleError(*this);
    const std::size_t qsize = coeffs_.size() - i;
    for (std::size_t k = i; k < qsize; ++k) coeffs_[k] -= coeffs_[k - i];
    bool exact = true;
    for (std::size_t k = qsize; k < coeffs_.size(); ++k) {
      // below x^i nothing of the quotient reaches the top part
      if (k < i ? coeffs_[k] != 0 : coeffs_[k] != coeffs_[k - i]) {
        exact = false;
        break;
      }
    }
    if (!exact) {
      // Undo the in-place quotient to report the true remainder.
      for (std::size_t k = qsize; k-- > i;) coeffs_[k] += coeffs_[k - i];
      throw NonDivisibleError(poly_divmod_unit(*this, binomial(i)).remainder);
    }
    coeffs_.resize(qsize);
    normalize();
  }
  return *this;
}

std::string DensePoly::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out += ',';
    out += coeffs_[k].get_str();
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const DensePoly& p) { return os << p.to_string(); }

DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
DensePoly operator-(DensePoly a) { return a *= BigInt(-1); }
DensePoly operator*(const DensePoly& a, const DensePoly& b) { return poly_mul(a, b); }
DensePoly operator*(DensePoly a, const BigInt& scalar) { return a *= scalar; }

NonDivisibleError::NonDivisibleError(DensePoly remainder)
    : std::runtime_error("polynomial division leaves remainder " + remainder.to_string()),
      remainder_(std::move(remainder)) {}

namespace {

using Span = std::span<const BigInt>;

// out[k + j] += a[k] * b[j]; out must be large enough.
void schoolbook_into(Span a, Span b, std::span<BigInt> out) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[k + j].get_mpz_t(), a[k].get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

// Equal-length Karatsuba; out has 2n - 1 zero-initialised slots.
void karatsuba_into(Span a, Span b, std::span<BigInt> out) {
  const std::size_t n = a.size();
  if (n < kKaratsubaThreshold) {
    schoolbook_into(a, b, out);
    return;
  }
  const std::size_t m = n / 2;
  const std::size_t h = n - m;  // high half length, h >= m
  Span a0 = a.first(m), a1 = a.subspan(m);
  Span b0 = b.first(m), b1 = b.subspan(m);

  std::vector<BigInt> z0(2 * m - 1, 0), z2(2 * h - 1, 0), z1(2 * h - 1, 0);
  karatsuba_into(a0, b0, z0);
  karatsuba_into(a1, b1, z2);

  std::vector<BigInt> sa(a1.begin(), a1.end()), sb(b1.begin(), b1.end());
  for (std::size_t k = 0; k < m; ++k) {
    sa[k] += a0[k];
    sb[k] += b0[k];
  }
  karatsuba_into(sa, sb, z1);
  for (std::size_t k = 0; k < z0.size(); ++k) z1[k] -= z0[k];
  for (std::size_t k = 0; k < z2.size(); ++k) z1[k] -= z2[k];

  for (std::size_t k = 0; k < z0.size(); ++k) out[k] += z0[k];
  for (std::size_t k = 0; k < z1.size(); ++k) out[k + m] += z1[k];
  for (std::size_t k = 0; k < z2.size(); ++k) out[k + 2 * m] += z2[k];
}

}  // namespace

DensePoly poly_mul_schoolbook(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  schoolbook_into(a.coeffs(), b.coeffs(), out);
  return DensePoly(std::move(out));
}

DensePoly poly_mul_karatsuba(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const DensePoly& longer = a.size() >= b.size() ? a : b;
  const DensePoly& shorter = a.size() >= b.size() ? b : a;
  const std::size_t s = shorter.size();
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  // Cut the longer operand into blocks of the shorter length.
  std::vector<BigInt> block(s, 0), partial(2 * s - 1, 0);
  for (std::size_t start = 0; start < longer.size(); start += s) {
    const std::size_t len = std::min(s, longer.size() - start);
    for (std::size_t k = 0; k < s; ++k) block[k] = k < len ? longer.coeffs()[start + k] : BigInt(0);
    for (auto& v : partial) v = 0;
    karatsuba_into(block, shorter.coeffs(), partial);
    for (std::size_t k = 0; k < partial.size() && start + k < out.size(); ++k) {
      out[start + k] += partial[k];
    }
  }
  return DensePoly(std::move(out));
}

DensePoly poly_mul(const DensePoly& a, const DensePoly& b) {
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return poly_mul_schoolbook(a, b);
  return poly_mul_karatsuba(a, b);
}

DensePoly poly_exact_div(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw NonDivisibleError(a);
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const BigInt& lc = b.leading();
  const std::size_t qsize = rem.size() - db;
  std::vector<BigInt> quot(qsize, 0);
  for (std::size_t k = qsize; k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      throw NonDivisibleError(DensePoly(std::move(rem)));
    }
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  DensePoly remainder(std::move(rem));
  if (!remainder.is_zero()) throw NonDivisibleError(std::move(remainder));
  return DensePoly(std::move(quot));
}

DivMod poly_divmod_unit(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const BigInt& lc = b.leading();
  if (lc != 1 && lc != -1) throw std::invalid_argument("poly_divmod_unit needs a unit leading coefficient");
  if (a.degree() < b.degree()) return {DensePoly(), a};
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const std::size_t qsize = rem.size() - db;
  std::vector<BigInt> quot(qsize, 0);
  for (std::size_t k = qsize; k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    quot[k] = lc == 1 ? top : BigInt(-top);
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

DensePoly poly_compose_power(const DensePoly& p, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("poly_compose_power needs k >= 1");
  if (p.is_zero()) return {};
  const auto step = static_cast<std::size_t>(k);
  std::vector<BigInt> out((p.size() - 1) * step + 1, 0);
  for (std::size_t j = 0; j < p.size(); ++j) out[j * step] = p.coeffs()[j];
  return DensePoly(std::move(out));
}

BigInt poly_eval_int(const DensePoly& p, const BigInt& a) {
  BigInt acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    acc *= a;
    acc += p.coeffs()[k];
  }
  return acc;
}

DensePoly derivative(const DensePoly& p) {
  if (p.size() <= 1) return {};
  std::vector<BigInt> out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p.coeffs()[k] * static_cast<unsigned long>(k);
  return DensePoly(std::move(out));
}

BigInt content(const DensePoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

DensePoly primitive_part(const DensePoly& p) {
  if (p.is_zero()) return {};
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return DensePoly(std::move(out));
}

std::vector<BigInt> even_coefficients(const DensePoly& p) {
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < p.size(); k += 2) out.push_back(p.coeffs()[k]);
  return out;
}

bool is_palindromic(std::span<const BigInt> seq) {
  return std::equal(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(seq.size() / 2), seq.rbegin());
}

bool is_unimodal(std::span<const BigInt> seq) {
  std::size_t k = 1;
  while (k < seq.size() && seq[k - 1] <= seq[k]) ++k;
  while (k < seq.size() && seq[k - 1] >= seq[k]) ++k;
  return k >= seq.size();
}

bool is_log_concave(std::span<const BigInt> seq) {
  for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
    if (seq[k] * seq[k] < seq[k - 1] * seq[k + 1]) return false;
  }
  return true;
}

ShapeReport shape_report(const DensePoly& p) {
  return {is_palindromic(p.coeffs()), is_unimodal(p.coeffs()), is_log_concave(p.coeffs())};
}

}  // namespace subsum
