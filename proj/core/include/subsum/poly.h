#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "subsum/bigint.h"

namespace subsum {

/// Dense univariate polynomial over Z. Coefficient k multiplies x^k; the
/// vector never carries trailing zeros, so the zero polynomial is empty.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<BigInt> coeffs);
  DensePoly(std::initializer_list<long> coeffs);

  static DensePoly constant(const BigInt& c);
  static DensePoly monomial(std::size_t k, const BigInt& c = 1);
  /// 1 + x^i.
  static DensePoly binomial(std::size_t i);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  /// Coefficient of x^k, zero above the degree.
  BigInt coeff(std::size_t k) const;
  const BigInt& leading() const;

  DensePoly& operator+=(const DensePoly& other);
  DensePoly& operator-=(const DensePoly& other);
  DensePoly& operator*=(const DensePoly& other);
  DensePoly& operator*=(const BigInt& scalar);

  /// In-place multiplication by (1 + x^i)^times.
  DensePoly& mul_binomial(std::size_t i, std::int64_t times = 1);
  /// In-place exact division by (1 + x^i)^times; throws NonDivisibleError.
  DensePoly& div_binomial(std::size_t i, std::int64_t times = 1);

  std::string to_string() const;

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const DensePoly& p);

DensePoly operator+(DensePoly a, const DensePoly& b);
DensePoly operator-(DensePoly a, const DensePoly& b);
DensePoly operator-(DensePoly a);
DensePoly operator*(const DensePoly& a, const DensePoly& b);
DensePoly operator*(DensePoly a, const BigInt& scalar);

/// Raised when a division over Z leaves a nonzero remainder. The carried
/// remainder is the dividend state at the point the division stopped; for a
/// divisor with unit leading coefficient it is the true remainder.
class NonDivisibleError : public std::runtime_error {
 public:
  explicit NonDivisibleError(DensePoly remainder);
  const DensePoly& remainder() const { return remainder_; }

 private:
  DensePoly remainder_;
};

/// Sizes (shorter operand) at or above which poly_mul switches to Karatsuba.
inline constexpr std::size_t kKaratsubaThreshold = 48;

DensePoly poly_mul(const DensePoly& a, const DensePoly& b);
DensePoly poly_mul_schoolbook(const DensePoly& a, const DensePoly& b);
DensePoly poly_mul_karatsuba(const DensePoly& a, const DensePoly& b);

/// Exact quotient a / b over Z.
DensePoly poly_exact_div(const DensePoly& a, const DensePoly& b);

/// Quotient and remainder for a divisor with leading coefficient +-1.
struct DivMod {
  DensePoly quotient;
  DensePoly remainder;
};
DivMod poly_divmod_unit(const DensePoly& a, const DensePoly& b);

/// p(x^k).
DensePoly poly_compose_power(const DensePoly& p, std::int64_t k);

BigInt poly_eval_int(const DensePoly& p, const BigInt& a);

DensePoly derivative(const DensePoly& p);

/// Positive gcd of the coefficients; 0 for the zero polynomial.
BigInt content(const DensePoly& p);
DensePoly primitive_part(const DensePoly& p);

/// Coefficients at even exponents, in order (the even part as a sequence).
std::vector<BigInt> even_coefficients(const DensePoly& p);

struct ShapeReport {
  bool palindromic = false;
  bool unimodal = false;
  bool log_concave = false;
};

bool is_palindromic(std::span<const BigInt> seq);
/// u_0 <= ... <= u_j >= ... >= u_m for some j; internal zeros count.
bool is_unimodal(std::span<const BigInt> seq);
/// u_k^2 >= u_{k-1} u_{k+1} at every internal k.
bool is_log_concave(std::span<const BigInt> seq);

ShapeReport shape_report(const DensePoly& p);

}  // namespace subsum
