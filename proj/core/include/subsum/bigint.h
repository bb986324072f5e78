#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace subsum {

/// Arbitrary-precision signed integer used for every coefficient and count.
using BigInt = mpz_class;

BigInt factorial(std::int64_t n);

/// base^exponent for a non-negative exponent.
BigInt pow_big(const BigInt& base, std::uint64_t exponent);

inline BigInt pow2(std::uint64_t exponent) { return pow_big(BigInt(2), exponent); }

/// Exponent of the prime p in a nonzero big integer.
std::int64_t big_valuation(const BigInt& value, unsigned long p);

/// Largest odd divisor of a nonzero big integer.
BigInt big_odd_part(const BigInt& value);

std::string to_decimal(const BigInt& value);

/// Parses a decimal string; throws std::invalid_argument on malformed input.
BigInt from_decimal(const std::string& text);

}  // namespace subsum
