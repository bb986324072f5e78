#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subsum/bigint.h"

namespace subsum {

// ---------------------------------------------------------------------------
// Integer kernels
// ---------------------------------------------------------------------------

/// Largest k with p^k | n. Throws std::domain_error for n == 0 and
/// std::invalid_argument for p < 2.
std::int64_t p_adic_valuation(std::int64_t n, std::int64_t p);

/// Largest odd divisor of m >= 1.
std::int64_t odd_part(std::int64_t m);

/// floor(log_base(m)) for m >= 1, computed with integer arithmetic only.
std::int64_t floor_log(std::int64_t base, std::int64_t m);

/// floor(log2(m)) for m >= 1.
std::int64_t floor_lb(std::int64_t m);

/// sum over 1 <= j <= m with b not dividing j of floor(log_b(b m / j)).
/// The identity with m holds for every base b > 1.
std::int64_t base_log_sum(std::int64_t b, std::int64_t m);

bool is_power_of(std::int64_t base, std::int64_t m);

struct DivisorStats {
  std::int64_t sigma0 = 0;
  std::int64_t sigma1 = 0;
  std::vector<std::int64_t> divisors;  // ascending
};

DivisorStats divisor_stats(std::int64_t n);

/// s(2n) = s(n) + 2n, s(2n-1) = 2n-1.
std::int64_t s_value(std::int64_t n);

/// Sum of val_2(j) for j = 1..n, i.e. val_2(n!).
std::int64_t val2_factorial(std::int64_t n);

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// An integer partition stored as a nonincreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Validates the invariants (positive, nonincreasing); throws
  /// std::invalid_argument otherwise.
  explicit Partition(std::vector<std::int64_t> parts);

  std::span<const std::int64_t> parts() const { return parts_; }
  /// m_lambda(i): number of parts equal to i.
  std::int64_t mult(std::int64_t i) const;
  /// l(lambda): number of parts.
  std::size_t length() const { return parts_.size(); }
  std::int64_t weight() const { return weight_; }
  std::int64_t largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const { return parts_.empty(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t weight_ = 0;
};

enum class FamilyKind { All, Binary, Ternary, Odd, PartsIn };

/// A restriction on allowed part sizes.
class PartFamily {
 public:
  PartFamily() = default;

  static PartFamily all() { return PartFamily(FamilyKind::All); }
  static PartFamily binary() { return PartFamily(FamilyKind::Binary); }
  static PartFamily ternary() { return PartFamily(FamilyKind::Ternary); }
  static PartFamily odd() { return PartFamily(FamilyKind::Odd); }
  /// Parts restricted to an explicit finite set of positive integers.
  static PartFamily parts_in(std::vector<std::int64_t> parts);

  /// Accepts "all", "binary", "ternary", "odd" and "parts-in:a,b,c".
  static PartFamily parse(std::string_view name);

  FamilyKind kind() const { return kind_; }
  bool allowed(std::int64_t part, std::int64_t n) const;
  /// Allowed parts in [1, n], ascending.
  std::vector<std::int64_t> allowed_parts(std::int64_t n) const;
  std::string name() const;

  friend bool operator==(const PartFamily&, const PartFamily&) = default;

 private:
  explicit PartFamily(FamilyKind kind) : kind_(kind) {}

  FamilyKind kind_ = FamilyKind::All;
  std::vector<std::int64_t> set_;  // sorted, only for PartsIn
};

/// Visits each partition of n whose parts are allowed by the family exactly
/// once, largest part descending (then recursively on the remainder).
/// n == 0 visits the empty partition.
void for_each_partition(std::int64_t n, const PartFamily& family,
                        const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(std::int64_t n, const PartFamily& family);

/// Number of partitions of n in the family (P(0) = 1).
BigInt count_partitions(std::int64_t n, const PartFamily& family);

/// Partitions of n into k sorts of parts, where parts of equal size but
/// different sorts are ordered: [x^n] prod_j 1/(1 - k x^j), equivalently
/// sum over lambda |- n of k^l(lambda).
BigInt count_colored_partitions(std::int64_t n, std::int64_t k);

}  // namespace subsum
