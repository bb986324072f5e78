#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "subsum/bigint.h"
#include "subsum/poly.h"

namespace subsum {

/// Exact rational, always in lowest terms with positive denominator.
using ExactRational = mpq_class;

/// beta(n, x, m) = sum over lambda |- n of sp(lambda, x)^m, m >= 0.
DensePoly beta_poly(std::int64_t n, std::int64_t m);

/// beta(n, a, m) evaluated exactly. For m < 0 a vanishing sp(lambda, a)
/// raises std::domain_error.
ExactRational beta_eval(std::int64_t n, const BigInt& a, std::int64_t m);

struct BetaPrime {
  BigInt by_derivative;   // d/dx beta(n, x, k) at x = 1
  BigInt by_closed_form;  // n k / 2 * sum_lambda 2^{k l(lambda)}
  std::int64_t valuation = 0;
};

/// beta'(n, 1, k) computed both ways; std::logic_error if they differ.
BetaPrime beta_prime(std::int64_t n, std::int64_t k);

/// val_2(beta'(n, 1, k)).
std::int64_t beta_prime_valuation(std::int64_t n, std::int64_t k);

}  // namespace subsum
