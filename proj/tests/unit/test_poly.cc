#include <gtest/gtest.h>

#include <random>

#include "convert.h"
#include "subsum/poly.h"

using namespace subsum;

namespace {

DensePoly random_poly(std::mt19937_64& rng, std::size_t size, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<BigInt> c(size);
  for (auto& v : c) v = dist(rng);
  if (size > 0 && c.back() == 0) c.back() = 1;
  return DensePoly(std::move(c));
}

}  // namespace

TEST(DensePoly, NormalizesTrailingZeros) {
  const DensePoly p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(DensePoly{}.is_zero());
  EXPECT_EQ(DensePoly{}.degree(), -1);
  EXPECT_EQ((DensePoly{0, 0}), DensePoly{});
  EXPECT_EQ(p.coeff(7), 0);
}

TEST(DensePoly, MultiplicationRoutesAgree) {
  std::mt19937_64 rng(20261015);
  for (std::size_t a : {1u, 5u, 47u, 48u, 49u, 130u, 301u}) {
    for (std::size_t b : {1u, 48u, 97u, 260u}) {
      const auto p = random_poly(rng, a, 1000);
      const auto q = random_poly(rng, b, 1000);
      const auto want = oracle::mul(coeffs_of(p), coeffs_of(q));
      EXPECT_EQ(coeffs_of(poly_mul_schoolbook(p, q)), want);
      EXPECT_EQ(coeffs_of(poly_mul_karatsuba(p, q)), want);
      EXPECT_EQ(coeffs_of(p * q), want);
    }
  }
  EXPECT_TRUE((DensePoly{} * DensePoly{1, 2}).is_zero());
}

TEST(DensePoly, BinomialMultiplyAndDivide) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_poly(rng, 1 + trial * 3, 50);
    for (std::size_t i = 1; i <= 6; ++i) {
      DensePoly q = p;
      q.mul_binomial(i, 3);
      EXPECT_EQ(coeffs_of(q), oracle::mul(coeffs_of(p), oracle::binomial_power(static_cast<std::int64_t>(i), 3)));
      q.div_binomial(i, 3);
      EXPECT_EQ(q, p);
    }
  }
  // spec example: (3,5,6,6,5,3) / (1+x) = (3,2,4,2,3)
  DensePoly num_star{3, 5, 6, 6, 5, 3};
  num_star.div_binomial(1);
  EXPECT_EQ(num_star, (DensePoly{3, 2, 4, 2, 3}));
  DensePoly bad{1, 1, 1};
  EXPECT_THROW(bad.div_binomial(1), NonDivisibleError);
  // quotient shorter than i: only the constant survives
  DensePoly short_q{1, 0, 1};
  short_q.div_binomial(2);
  EXPECT_EQ(short_q, DensePoly{1});
  DensePoly short_bad{1, 1, 1};
  EXPECT_THROW(short_bad.div_binomial(2), NonDivisibleError);
  DensePoly tall{1, 0, 0, 0, 0, 1};
  EXPECT_THROW(tall.div_binomial(4), NonDivisibleError);
}

TEST(DensePoly, DivisionByUnitLeading) {
  const DensePoly a{5, 0, 3, 1, 2};
  const DensePoly b{1, 1, 1};
  const auto dm = poly_divmod_unit(a, b);
  EXPECT_EQ(dm.quotient * b + dm.remainder, a);
  EXPECT_LT(dm.remainder.degree(), b.degree());
  EXPECT_EQ(poly_exact_div(DensePoly{2, 4, 2} * DensePoly{3, 0, 1}, DensePoly{1, 1}), (DensePoly{6, 6, 2, 2}));
  EXPECT_THROW(poly_exact_div(DensePoly{1, 0, 1}, DensePoly{1, 1}), NonDivisibleError);
}

TEST(DensePoly, Helpers) {
  const DensePoly p{3, 2, 4, 2, 3};
  EXPECT_EQ(poly_eval_int(p, 1), 14);
  EXPECT_EQ(poly_eval_int(p, -1), 6);
  EXPECT_EQ(derivative(p), (DensePoly{2, 8, 6, 12}));
  EXPECT_EQ(content(DensePoly{4, 6, 10}), 2);
  EXPECT_EQ(primitive_part(DensePoly{-4, 6, -10}), (DensePoly{2, -3, 5}));
  EXPECT_EQ(poly_compose_power(DensePoly{1, 2}, 3), (DensePoly{1, 0, 0, 2}));
  EXPECT_EQ(even_coefficients(p), (std::vector<BigInt>{3, 4, 3}));
}

TEST(Shape, ExampleRow) {
  // (3,2,4,2,3): palindromic, neither unimodal nor log-concave
  const auto r = shape_report(DensePoly{3, 2, 4, 2, 3});
  EXPECT_TRUE(r.palindromic);
  EXPECT_FALSE(r.unimodal);
  EXPECT_FALSE(r.log_concave);
  const std::vector<BigInt> hump{1, 3, 3, 1};
  EXPECT_TRUE(is_unimodal(hump));
  EXPECT_TRUE(is_log_concave(hump));
  const std::vector<BigInt> gap{1, 0, 1};
  EXPECT_FALSE(is_unimodal(gap));
  EXPECT_TRUE(is_unimodal(std::vector<BigInt>{}));
}
