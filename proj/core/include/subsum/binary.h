#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subsum/bigint.h"
#include "subsum/cyclotomic.h"
#include "subsum/partitions.h"
#include "subsum/poly.h"

namespace subsum {

enum class NumBStrategy { Naive, Recurrence };

/// num_B(n, x) for binary partitions. G_B(n) = 1, so this equals
/// num*(n) over the binary family.
DensePoly num_b(std::int64_t n, NumBStrategy strategy = NumBStrategy::Recurrence);

/// f_{2n}(x) = prod_{i=1}^{val_2(2n)} (1 + x^{2^i}); odd input is an error.
BinomialProduct f_even_factor(std::int64_t two_n);

enum class DDegreeStrategy { Sum, Recursion, Digits };

/// d(n) = deg num_B(n).
std::int64_t d_degree(std::int64_t n, DDegreeStrategy strategy = DDegreeStrategy::Sum);

/// B(0), ..., B(n): numbers of binary partitions.
std::vector<BigInt> binary_partition_counts(std::int64_t n);

/// Closed forms for the coefficients b_0, b_1, b_2 of num_B(n).
BigInt b_closed(std::int64_t n, int k);

/// b_1(n) = sum_{k <= n/2} 2k B(k), the second closed form.
BigInt b1_half_sum(std::int64_t n);

struct PairCoverEntry {
  Partition lambda;
  Partition mate;  // lambda with one part 2^i split into two parts 2^{i-1}
  std::int64_t i = 0;
};

struct PairCover {
  std::int64_t n = 0;
  std::vector<PairCoverEntry> pairs;
};

/// Greedy pairing of the binary partitions of n, descending over (i, m)
/// where lambda has largest part 2^i occurring m times. Candidates are taken
/// in enumeration order. Requires n >= 2.
PairCover pair_cover(std::int64_t n);

/// Checks that the pairs cover the binary partitions of n exactly once and
/// that each h_lambda + h_mate vanishes modulo 1 + x + x^2.
bool verify_pair_cover(const PairCover& cover);

struct BinaryDivisibilityReport {
  std::int64_t n = 0;
  bool third_root_divides = false;
  /// (i, whether 1 + x^{2^i} divides num_B(n)) for 2^i <= n.
  std::vector<std::pair<std::int64_t, bool>> binomial_divides;
};

BinaryDivisibilityReport binary_divisibility(std::int64_t n);

/// Whether 1 + x^{2^i} divides num_B(n), decided on num_B(n mod 2^i).
bool binary_binomial_divides_reduced(std::int64_t n, std::int64_t i);

void clear_binary_caches();

}  // namespace subsum
