#include "subsum/power_sums.h"

#include <stdexcept>

#include "subsum/partitions.h"
#include "subsum/subsum.h"

namespace subsum {

namespace {

DensePoly poly_pow(DensePoly base, std::int64_t e) {
  DensePoly result{1};
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base);
    e >>= 1;
    if (e > 0) base = poly_mul(base, base);
  }
  return result;
}

}  // namespace

DensePoly beta_poly(std::int64_t n, std::int64_t m) {
  if (n < 0) throw std::domain_error("beta requires n >= 0");
  if (m < 0) throw std::domain_error("beta_poly requires m >= 0; use beta_eval for negative m");
  DensePoly total;
  for_each_partition(n, PartFamily::all(), [&](const Partition& lambda) { total += poly_pow(sp_poly(lambda), m); });
  return total;
}

ExactRational beta_eval(std::int64_t n, const BigInt& a, std::int64_t m) {
  if (n < 0) throw std::domain_error("beta requires n >= 0");
  ExactRational total = 0;
  for_each_partition(n, PartFamily::all(), [&](const Partition& lambda) {
    BigInt base = 1;
    for (auto part : lambda.parts()) base *= 1 + pow_big(a, static_cast<std::uint64_t>(part));
    if (m >= 0) {
      total += ExactRational(pow_big(base, static_cast<std::uint64_t>(m)));
      return;
    }
    if (base == 0) {
      throw std::domain_error("sp(" + lambda.to_string() + ", " + a.get_str() + ") = 0 raised to a negative power");
    }
    ExactRational term(BigInt(1), pow_big(base, static_cast<std::uint64_t>(-m)));
    term.canonicalize();
    total += term;
  });
  return total;
}

BetaPrime beta_prime(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw std::domain_error("beta' requires n, k >= 1");
  BetaPrime out;
  out.by_derivative = poly_eval_int(derivative(beta_poly(n, k)), 1);
  BigInt sum = 0;
  for_each_partition(n, PartFamily::all(), [&](const Partition& lambda) {
    sum += pow2(static_cast<std::uint64_t>(k) * lambda.length());
  });
  BigInt twice = BigInt(n) * BigInt(k) * sum;
  if (!mpz_divisible_2exp_p(twice.get_mpz_t(), 1)) throw std::logic_error("n k sum is odd");
  out.by_closed_form = twice / 2;
  if (out.by_derivative != out.by_closed_form) {
    throw std::logic_error("beta'(" + std::to_string(n) + ", 1, " + std::to_string(k) + ") routes disagree");
  }
  out.valuation = big_valuation(out.by_derivative, 2);
  return out;
}

std::int64_t beta_prime_valuation(std::int64_t n, std::int64_t k) { return beta_prime(n, k).valuation; }

}  // namespace subsum
