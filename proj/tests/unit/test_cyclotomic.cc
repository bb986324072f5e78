#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "convert.h"
#include "subsum/cyclo_residue.h"
#include "subsum/cyclotomic.h"

using namespace subsum;

TEST(Cyclotomic, ProductOverDivisorsIsXnMinus1) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    oracle::Coeffs prod{1};
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) prod = oracle::mul(prod, coeffs_of(cyclotomic(d)));
    oracle::Coeffs want(static_cast<std::size_t>(n) + 1, 0);
    want[0] = -1;
    want[static_cast<std::size_t>(n)] = 1;
    EXPECT_EQ(prod, want) << n;
    EXPECT_EQ(cyclotomic(n).degree(), euler_phi(n)) << n;
  }
}

TEST(Cyclotomic, BinomialSupport) {
  EXPECT_EQ(binomial_support(1), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(binomial_support(6), (std::vector<std::int64_t>{4, 12}));
  for (std::int64_t i = 1; i <= 40; ++i) {
    oracle::Coeffs prod{1};
    for (auto d : binomial_support(i)) prod = oracle::mul(prod, coeffs_of(cyclotomic(d)));
    EXPECT_EQ(prod, oracle::binomial_power(i, 1)) << i;
  }
}

TEST(ExponentMaps, Arithmetic) {
  BinomialProduct f{{1, 2}, {3, 1}};
  BinomialProduct g{{1, 1}};
  EXPECT_EQ((f - g), (BinomialProduct{{1, 1}, {3, 1}}));
  EXPECT_TRUE((f - g - g - g).entries().count(1));
  EXPECT_FALSE((g - f).is_polynomial());
  EXPECT_EQ(binomial_degree(f), 5);
  EXPECT_EQ(cyclo_degree(fbp_to_cyclo(f)), 5);
  EXPECT_THROW(fbp_expand(g - f), std::domain_error);
  EXPECT_THROW(f.add(0, 1), std::invalid_argument);
  EXPECT_EQ((f - f).empty(), true);
}

TEST(ExponentMaps, ExpandMatchesOracle) {
  const BinomialProduct f{{1, 2}, {2, 1}, {5, 3}};
  oracle::Coeffs want = oracle::mul(oracle::binomial_power(1, 2), oracle::binomial_power(2, 1));
  want = oracle::mul(want, oracle::binomial_power(5, 3));
  EXPECT_EQ(coeffs_of(fbp_expand(f)), want);
  EXPECT_EQ(coeffs_of(cyclo_expand(fbp_to_cyclo(f))), want);
}

TEST(ExponentMaps, GcdAgainstRationalEuclid) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> idx(1, 12);
  std::uniform_int_distribution<int> ex(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<BinomialProduct> fs(3);
    for (auto& f : fs)
      for (int k = 0; k < 4; ++k) f.add(idx(rng), ex(rng));
    oracle::QCoeffs g;
    for (const auto& f : fs) {
      const auto q = oracle::to_q(coeffs_of(fbp_expand(f)));
      g = g.empty() ? q : oracle::q_gcd(g, q);
    }
    EXPECT_EQ(coeffs_of(fbp_expand(fbp_gcd(fs))), oracle::to_z(g)) << trial;
  }
  for (std::int64_t n = 1; n <= 20; ++n)
    for (std::int64_t m = 1; m <= 20; ++m) {
      const auto g = oracle::q_gcd(oracle::to_q(oracle::binomial_power(n, 1)), oracle::to_q(oracle::binomial_power(m, 1)));
      EXPECT_EQ(coeffs_of(fbp_expand(gcd_binomial(n, m))), oracle::to_z(g)) << n << " " << m;
    }
}

TEST(ExponentMaps, MaxDividingPower) {
  // (1+x)^2 (1+x^3) (1+x^2): (1+x) divides 1+x^3 too, not 1+x^2
  const BinomialProduct f{{1, 2}, {2, 1}, {3, 1}};
  EXPECT_EQ(max_dividing_power(1, f), 3);
  EXPECT_EQ(max_dividing_power(2, f), 1);
  EXPECT_EQ(max_dividing_power(3, f), 1);
  EXPECT_EQ(max_dividing_power(4, f), 0);
}

TEST(CycloResidues, ReduceAndMultiply) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-20, 20);
  for (std::int64_t m : {1, 2, 3, 4, 5, 6, 8, 12, 15}) {
    std::vector<BigInt> a(17), b(11);
    for (auto& v : a) v = dist(rng);
    for (auto& v : b) v = dist(rng);
    const DensePoly pa(a), pb(b);
    const auto ra = reduce_mod_cyclotomic(pa, m);
    EXPECT_EQ(ra.coeffs().size(), static_cast<std::size_t>(euler_phi(m)));
    EXPECT_EQ(residue_mul(ra, reduce_mod_cyclotomic(pb, m)), reduce_mod_cyclotomic(pa * pb, m));
    EXPECT_EQ(residue_add(ra, reduce_mod_cyclotomic(pb, m)), reduce_mod_cyclotomic(pa + pb, m));
    EXPECT_EQ(residue_sub(ra, ra).is_zero(), true);
  }
  EXPECT_TRUE(reduce_mod_cyclotomic(DensePoly{1, 1, 1}, 3).is_zero());
  EXPECT_EQ(CycloResidue::root_power(4, 2), CycloResidue::constant(4, -1));
  EXPECT_THROW(residue_mul(CycloResidue::constant(3, 1), CycloResidue::constant(4, 1)), std::invalid_argument);
}

TEST(CycloResidues, AbsSquaredAgainstFloatingPoint) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (std::int64_t m : {1, 2, 3, 4, 6}) {
    EXPECT_TRUE(abs_squared_supported(m));
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<BigInt> c(9);
      for (auto& v : c) v = dist(rng);
      const DensePoly p(c);
      EXPECT_EQ(abs_squared_at_root(reduce_mod_cyclotomic(p, m)), oracle::abs2_at_root_float(coeffs_of(p), m)) << m;
    }
  }
  EXPECT_FALSE(abs_squared_supported(5));
  EXPECT_THROW(abs_squared_at_root(CycloResidue::constant(5, 1)), std::invalid_argument);
}
