#include "subsum/cyclotomic.h"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

#include "subsum/partitions.h"

namespace subsum {

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::domain_error("euler_phi requires n >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

struct CyclotomicTable {
  std::shared_mutex mutex;
  std::map<std::int64_t, std::unique_ptr<const DensePoly>> entries;
};

CyclotomicTable& table() {
  static CyclotomicTable instance;
  return instance;
}

}  // namespace

const DensePoly& cyclotomic(std::int64_t d) {
  if (d < 1) throw std::domain_error("cyclotomic index must be >= 1");
  auto& t = table();
  {
    std::shared_lock lock(t.mutex);
    auto it = t.entries.find(d);
    if (it != t.entries.end()) return *it->second;
  }
  // x^d - 1 divided by Phi_e for every proper divisor e of d.
  std::vector<BigInt> coeffs(static_cast<std::size_t>(d) + 1, 0);
  coeffs[0] = -1;
  coeffs[static_cast<std::size_t>(d)] = 1;
  DensePoly value(std::move(coeffs));
  for (auto e : divisor_stats(d).divisors) {
    if (e == d) continue;
    value = poly_divmod_unit(value, cyclotomic(e)).quotient;
  }
  std::unique_lock lock(t.mutex);
  auto [it, inserted] = t.entries.try_emplace(d, std::make_unique<const DensePoly>(std::move(value)));
  return *it->second;
}

std::vector<std::int64_t> binomial_support(std::int64_t i) {
  if (i < 1) throw std::domain_error("binomial_support requires i >= 1");
  std::vector<std::int64_t> out;
  for (auto d : divisor_stats(2 * i).divisors) {
    if (i % d != 0) out.push_back(d);
  }
  return out;
}

std::int64_t binomial_degree(const BinomialProduct& f) {
  std::int64_t total = 0;
  for (const auto& [i, e] : f.entries()) total += i * e;
  return total;
}

std::int64_t cyclo_degree(const CycloFactored& f) {
  std::int64_t total = 0;
  for (const auto& [d, e] : f.entries()) total += euler_phi(d) * e;
  return total;
}

BinomialProduct gcd_binomial(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::domain_error("gcd_binomial requires positive exponents");
  if (p_adic_valuation(n, 2) != p_adic_valuation(m, 2)) return {};
  BinomialProduct out;
  out.add(std::gcd(n, m), 1);
  return out;
}

DensePoly fbp_expand(const BinomialProduct& f) {
  if (!f.is_polynomial()) throw std::domain_error("binomial product with negative exponent is not a polynomial");
  DensePoly out = DensePoly::constant(1);
  for (const auto& [i, e] : f.entries()) out.mul_binomial(static_cast<std::size_t>(i), e);
  return out;
}

DensePoly cyclo_expand(const CycloFactored& f) {
  if (!f.is_polynomial()) throw std::domain_error("cyclotomic product with negative exponent is not a polynomial");
  DensePoly out = DensePoly::constant(1);
  for (const auto& [d, e] : f.entries()) {
    for (std::int64_t k = 0; k < e; ++k) out = poly_mul(out, cyclotomic(d));
  }
  return out;
}

CycloFactored fbp_to_cyclo(const BinomialProduct& f) {
  CycloFactored out;
  for (const auto& [i, e] : f.entries()) {
    for (auto d : binomial_support(i)) out.add(d, e);
  }
  return out;
}

std::int64_t max_dividing_power(std::int64_t i, const BinomialProduct& f) {
  if (i < 1) throw std::domain_error("max_dividing_power requires i >= 1");
  std::int64_t total = 0;
  for (std::int64_t k = i; k <= f.max_index(); k += 2 * i) total += f.exponent(k);
  return total;
}

BinomialProduct fbp_gcd(std::span<const BinomialProduct> fs) {
  if (fs.empty()) throw std::invalid_argument("gcd of an empty collection");
  std::int64_t top = 0;
  for (const auto& f : fs) {
    if (!f.is_polynomial()) throw std::domain_error("fbp_gcd inputs must have non-negative exponents");
    top = std::max(top, f.max_index());
  }
  // gamma_i: largest power of (1 + x^i) dividing every input.
  std::vector<std::int64_t> gamma(static_cast<std::size_t>(top) + 1, 0);
  for (std::int64_t i = 1; i <= top; ++i) {
    std::int64_t best = max_dividing_power(i, fs.front());
    for (const auto& f : fs.subspan(1)) {
      if (best == 0) break;
      best = std::min(best, max_dividing_power(i, f));
    }
    gamma[static_cast<std::size_t>(i)] = best;
  }
  // Peel off the contributions of odd multiples, top-down.
  std::vector<std::int64_t> c(static_cast<std::size_t>(top) + 1, 0);
  BinomialProduct out;
  for (std::int64_t i = top; i >= 1; --i) {
    std::int64_t value = gamma[static_cast<std::size_t>(i)];
    for (std::int64_t k = 3 * i; k <= top; k += 2 * i) value -= c[static_cast<std::size_t>(k)];
    c[static_cast<std::size_t>(i)] = value;
    out.set(i, value);
  }
  return out;
}

}  // namespace subsum
