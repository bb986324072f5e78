#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "subsum/poly.h"

namespace subsum {

std::int64_t euler_phi(std::int64_t n);

/// Phi_d(x), memoized for the process lifetime. The returned reference stays
/// valid; entries are never modified after insertion. Thread-safe.
const DensePoly& cyclotomic(std::int64_t d);

/// {d : d | 2i, d does not divide i}: the cyclotomic indices of 1 + x^i.
std::vector<std::int64_t> binomial_support(std::int64_t i);

/// Sparse signed exponent map index -> exponent with zero entries removed.
/// The tag selects what an index denotes (binomial 1 + x^i or Phi_d).
template <typename Tag>
class ExponentMap {
 public:
  using Map = std::map<std::int64_t, std::int64_t>;

  ExponentMap() = default;
  ExponentMap(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init) {
    for (const auto& [index, exponent] : init) add(index, exponent);
  }
  explicit ExponentMap(const Map& map) {
    for (const auto& [index, exponent] : map) add(index, exponent);
  }

  std::int64_t exponent(std::int64_t index) const {
    auto it = exps_.find(index);
    return it == exps_.end() ? 0 : it->second;
  }

  void add(std::int64_t index, std::int64_t delta) {
    if (index < 1) throw std::invalid_argument("exponent map indices must be >= 1");
    if (delta == 0) return;
    auto& slot = exps_[index];
    slot += delta;
    if (slot == 0) exps_.erase(index);
  }

  void set(std::int64_t index, std::int64_t value) {
    if (index < 1) throw std::invalid_argument("exponent map indices must be >= 1");
    if (value == 0) {
      exps_.erase(index);
    } else {
      exps_[index] = value;
    }
  }

  const Map& entries() const { return exps_; }
  bool empty() const { return exps_.empty(); }
  std::int64_t max_index() const { return exps_.empty() ? 0 : exps_.rbegin()->first; }

  /// True when every exponent is non-negative.
  bool is_polynomial() const {
    for (const auto& [index, exponent] : exps_) {
      if (exponent < 0) return false;
    }
    return true;
  }

  /// Product of the represented objects: exponents add.
  ExponentMap& operator+=(const ExponentMap& other) {
    for (const auto& [index, exponent] : other.exps_) add(index, exponent);
    return *this;
  }
  /// Quotient: exponents subtract.
  ExponentMap& operator-=(const ExponentMap& other) {
    for (const auto& [index, exponent] : other.exps_) add(index, -exponent);
    return *this;
  }
  friend ExponentMap operator+(ExponentMap a, const ExponentMap& b) { return a += b; }
  friend ExponentMap operator-(ExponentMap a, const ExponentMap& b) { return a -= b; }
  friend bool operator==(const ExponentMap&, const ExponentMap&) = default;

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [index, exponent] : exps_) {
      if (!first) out += ", ";
      first = false;
      out += std::to_string(index) + ":" + std::to_string(exponent);
    }
    return out + "}";
  }

 private:
  Map exps_;
};

struct BinomialTag {};
struct CycloTag {};

/// prod_i (1 + x^i)^{e_i}; negative exponents denote rational objects.
using BinomialProduct = ExponentMap<BinomialTag>;
/// prod_d Phi_d(x)^{e_d}; the canonical factorization basis.
using CycloFactored = ExponentMap<CycloTag>;

template <typename Tag>
std::ostream& operator<<(std::ostream& os, const ExponentMap<Tag>& m) {
  return os << m.to_string();
}

/// Sum of i * e_i.
std::int64_t binomial_degree(const BinomialProduct& f);
/// Sum of phi(d) * e_d.
std::int64_t cyclo_degree(const CycloFactored& f);

/// gcd(1 + x^n, 1 + x^m) as a binomial product.
BinomialProduct gcd_binomial(std::int64_t n, std::int64_t m);

/// Expanded polynomial; throws std::domain_error for negative exponents.
DensePoly fbp_expand(const BinomialProduct& f);
DensePoly cyclo_expand(const CycloFactored& f);

CycloFactored fbp_to_cyclo(const BinomialProduct& f);

/// gcd of a nonempty collection of binomial products with non-negative
/// exponents, returned as a binomial product.
BinomialProduct fbp_gcd(std::span<const BinomialProduct> fs);

/// Largest k with (1 + x^i)^k dividing f: sum of e_{i*j} over odd j.
std::int64_t max_dividing_power(std::int64_t i, const BinomialProduct& f);

}  // namespace subsum
