#include "subsum/bigint.h"

#include <stdexcept>

namespace subsum {

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt pow_big(const BigInt& base, std::uint64_t exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

std::int64_t big_valuation(const BigInt& value, unsigned long p) {
  if (value == 0) throw std::domain_error("valuation of zero is undefined");
  if (p == 2) return static_cast<std::int64_t>(mpz_scan1(value.get_mpz_t(), 0));
  BigInt rest = value;
  std::int64_t k = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++k;
  }
  return k;
}

BigInt big_odd_part(const BigInt& value) {
  BigInt result;
  mpz_tdiv_q_2exp(result.get_mpz_t(), value.get_mpz_t(),
                  static_cast<mp_bitcnt_t>(big_valuation(value, 2)));
  return result;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt from_decimal(const std::string& text) {
  BigInt result;
  if (text.empty() || result.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return result;
}

}  // namespace subsum
