#include <gtest/gtest.h>

#include "convert.h"
#include "subsum/partitions.h"
#include "subsum/power_sums.h"

using namespace subsum;

namespace {

// sum over lambda |- n of prod (1 + a^part)^m, straight from the definition
mpq_class beta_brute(std::int64_t n, const mpq_class& a, std::int64_t m) {
  mpq_class total = 0;
  for (const auto& lambda : oracle::partitions(n, oracle::allow_all)) {
    mpq_class sp = 1;
    for (auto part : lambda) {
      mpq_class power = 1;
      for (std::int64_t k = 0; k < part; ++k) power *= a;
      sp *= 1 + power;
    }
    mpq_class term = 1;
    if (m >= 0) {
      for (std::int64_t k = 0; k < m; ++k) term *= sp;
    } else {
      for (std::int64_t k = 0; k < -m; ++k) term /= sp;
    }
    total += term;
  }
  return total;
}

}  // namespace

TEST(Beta, Examples) {
  // sp((2),1) = 2 and sp((1,1),1) = 4, so the sum of reciprocals is 3/4
  EXPECT_EQ(beta_eval(2, 1, -1), mpq_class(3, 4));
  EXPECT_EQ(beta_eval(3, 1, 1), 14);  // P_2(3)
  EXPECT_EQ(beta_poly(3, 1), (DensePoly{3, 4, 4, 3}));
  EXPECT_EQ(beta_poly(4, 0), DensePoly{5});
  EXPECT_THROW(beta_eval(1, -1, -1), std::domain_error);
}

TEST(Beta, EvalAgainstDefinition) {
  for (std::int64_t n = 1; n <= 10; ++n)
    for (long a : {-2L, -1L, 0L, 1L, 3L})
      for (std::int64_t m = 0; m <= 3; ++m) EXPECT_EQ(beta_eval(n, a, m), beta_brute(n, a, m)) << n << a << m;
  for (std::int64_t n = 1; n <= 8; ++n) EXPECT_EQ(beta_eval(n, 2, -2), beta_brute(n, 2, -2)) << n;
}

TEST(Beta, PolynomialAgainstDefinition) {
  for (std::int64_t n = 1; n <= 9; ++n)
    for (std::int64_t m = 0; m <= 3; ++m) {
      oracle::Coeffs want;
      for (const auto& lambda : oracle::partitions(n, oracle::allow_all)) {
        oracle::Coeffs sp{1};
        for (auto part : lambda) sp = oracle::mul(sp, oracle::binomial_power(part, 1));
        oracle::Coeffs term{1};
        for (std::int64_t k = 0; k < m; ++k) term = oracle::mul(term, sp);
        want = oracle::add(want, term);
      }
      EXPECT_EQ(coeffs_of(beta_poly(n, m)), want) << n << " " << m;
    }
}

TEST(Beta, ColoredAndAlternating) {
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t m = 0; m <= 3; ++m) {
      EXPECT_EQ(beta_eval(n, 1, m), count_colored_partitions(n, std::int64_t{1} << m));
      if (m >= 1) {
        EXPECT_EQ(beta_eval(2 * n, -1, m), count_colored_partitions(n, std::int64_t{1} << m));
        EXPECT_EQ(beta_eval(2 * n - 1, -1, m), 0);
      }
    }
}

TEST(BetaPrime, BothRoutesAndValuation) {
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t k = 1; k <= 4; ++k) {
      const auto bp = beta_prime(n, k);
      EXPECT_EQ(bp.by_derivative, bp.by_closed_form);
      EXPECT_EQ(bp.by_derivative, poly_eval_int(derivative(beta_poly(n, k)), 1));
      EXPECT_EQ(bp.valuation, p_adic_valuation(n, 2) + p_adic_valuation(k, 2) + k - 1) << n << " " << k;
      EXPECT_EQ(beta_prime_valuation(n, k), bp.valuation);
    }
}
