#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsum/bigint.h"
#include "subsum/poly.h"

namespace subsum {

enum class IrreducibilityVerdict { Irreducible, Reducible, Inconclusive };

std::string to_string(IrreducibilityVerdict v);

struct IrreducibilityResult {
  IrreducibilityVerdict verdict = IrreducibilityVerdict::Inconclusive;
  /// Content of the input; the test runs on the primitive part.
  BigInt content;
  /// For Reducible: degree of the factor found, and what it is.
  std::int64_t witness_degree = 0;
  std::string witness;
  /// Primes whose factorization pattern entered the intersection.
  std::vector<std::uint64_t> primes_used;
  /// Degrees d, 0 < d < deg, still possible for a factor over Z.
  std::vector<std::int64_t> open_degrees;
};

struct IrreducibilityOptions {
  /// Usable primes (above the degree, not dividing the leading coefficient,
  /// squarefree reduction) tried before giving up as inconclusive.
  std::size_t max_primes = 40;
};

/// Probabilistic-style irreducibility test over Z via degree patterns of
/// factorizations modulo primes. Irreducible is only returned when the
/// patterns rule out every proper factor degree, so it is sound; Reducible
/// is returned only with an explicit factor (rational root or cyclotomic).
IrreducibilityResult probable_irreducibility(const DensePoly& p, const IrreducibilityOptions& options = {});

/// Degrees of the irreducible factors of p modulo q (with multiplicity),
/// or nullopt when p mod q drops degree or is not squarefree.
std::optional<std::vector<std::int64_t>> factor_degrees_mod(const DensePoly& p, std::uint64_t q);

}  // namespace subsum
