#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subsum/poly.h"

namespace subsum {

/// An element of Z[x]/Phi_m(x), stored as the canonical remainder: exactly
/// phi(m) coefficients. Evaluating at a primitive m-th root of unity is
/// faithful, so this represents p(zeta_m) exactly.
class CycloResidue {
 public:
  /// Zero modulo Phi_1.
  CycloResidue() : coeffs_(1, 0) {}
  /// Reduces the given coefficients modulo Phi_m.
  CycloResidue(std::int64_t modulus_index, std::span<const BigInt> coeffs);
  /// The residue of an integer constant.
  static CycloResidue constant(std::int64_t modulus_index, const BigInt& value);
  /// The residue of x^k, i.e. zeta_m^k.
  static CycloResidue root_power(std::int64_t modulus_index, std::int64_t k);

  std::int64_t modulus_index() const { return m_; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const CycloResidue&, const CycloResidue&) = default;

 private:
  std::int64_t m_ = 1;
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloResidue& r);

CycloResidue reduce_mod_cyclotomic(const DensePoly& p, std::int64_t m);

/// Exact product in Z[x]/Phi_m. Throws std::invalid_argument on mismatched
/// moduli.
CycloResidue residue_mul(const CycloResidue& a, const CycloResidue& b);
CycloResidue residue_add(const CycloResidue& a, const CycloResidue& b);
CycloResidue residue_sub(const CycloResidue& a, const CycloResidue& b);
CycloResidue residue_scale(const CycloResidue& a, const BigInt& k);

/// True when |zeta_m| based norm |z|^2 is a rational integer computable from
/// the residue alone: m in {1, 2, 3, 4, 6}.
bool abs_squared_supported(std::int64_t m);

/// |z|^2 for z in Z[zeta_m], m in {1, 2, 3, 4, 6}; throws
/// std::invalid_argument for other moduli.
BigInt abs_squared_at_root(const CycloResidue& r);

}  // namespace subsum
