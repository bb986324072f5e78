#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "subsum/cyclo_residue.h"
#include "subsum/cyclotomic.h"
#include "subsum/partitions.h"
#include "subsum/poly.h"

namespace subsum {

/// prod over parts of (1 + x^part).
DensePoly sp_poly(const Partition& lambda);

/// h_lambda: i -> floor(n/i) - m_lambda(i) over the family's allowed i <= n.
/// Throws std::invalid_argument when lambda is not a family partition of n.
BinomialProduct h_product(std::int64_t n, const Partition& lambda, const PartFamily& family);

/// den*: i -> floor(n/i) over allowed i <= n.
BinomialProduct den_star(std::int64_t n, const PartFamily& family);

enum class NumStarStrategy { Naive, PartDP };

/// Sum of h_lambda over the family's partitions of n; num*(0) = 1.
DensePoly num_star(std::int64_t n, const PartFamily& family,
                   NumStarStrategy strategy = NumStarStrategy::PartDP);

enum class GStrategy { Oracle, ClosedForm };

/// G(n): gcd of all h_lambda. ClosedForm is only defined for the All family.
BinomialProduct big_g(std::int64_t n, const PartFamily& family, GStrategy strategy);

/// c_{n,i} = floor(n/i) - floor(lb(floor(n/i))) - 1 for 1 <= i <= n.
std::int64_t c_exponent(std::int64_t n, std::int64_t i);

/// (c_{n,1}, ..., c_{n,floor(n/3)}); empty for n < 3.
std::vector<std::int64_t> c_row(std::int64_t n);

/// a_{n,i} = floor(lb(n/i)) + 1: exponent of (1 + x^i) in den(n).
std::int64_t den_exponent(std::int64_t n, std::int64_t i);

struct NumDenTriple {
  std::int64_t n = 0;
  PartFamily family;
  DensePoly num;
  BinomialProduct den;
  BinomialProduct g;
};

/// num, den and G for a family, memoized per (family, n). For the All family
/// G and den use the closed forms; other families use the gcd oracle.
std::shared_ptr<const NumDenTriple> num_den(std::int64_t n, const PartFamily& family = PartFamily::all());

/// Drops all in-memory memo tables (num/den triples, binary recurrence).
void clear_subsum_caches();

/// G(n)/G(n-1) = prod over d | n with o(n) not dividing d of (1 + x^d).
BinomialProduct quotient_qg(std::int64_t n);

/// den(n)/den(n-1) = prod over d | n of Phi_{2d}.
CycloFactored quotient_qd(std::int64_t n);

struct DegreeStats {
  std::int64_t deg_den = 0;
  std::int64_t deg_num = 0;
};

/// Degrees of den(n) and num(n) from the closed forms; every route is
/// evaluated and must agree (std::logic_error otherwise).
DegreeStats degree_stats(std::int64_t n);

/// f(n, d, x) = den(n) / ((1 + x^d)^{floor(n/d)} den(r)), r = n mod d, as
/// a signed cyclotomic exponent map.
CycloFactored f_factor(std::int64_t n, std::int64_t d);

/// num(n, x) reduced modulo Phi_m (family All).
CycloResidue num_at_root(std::int64_t n, std::int64_t m);

struct NumrIdentity {
  bool holds = false;
  CycloResidue lhs;
  CycloResidue rhs;
};

/// Checks num(n,z) * prod_{j=r+1..n} (1 - z^{o(j)}) = (2d)^q q! num(r,z)
/// in Z[x]/Phi_{2d}, with q = floor(n/d) and r = n - dq.
NumrIdentity numr_identity_check(std::int64_t n, std::int64_t d);

/// q_lambda = h_lambda / G(n) in cyclotomic exponents (family All).
CycloFactored q_lambda(std::int64_t n, const Partition& lambda);

/// Sum of q_lambda over lambda = (d^{floor(n/d)}, mu), mu |- r, reduced
/// modulo Phi_{2d}.
CycloResidue restricted_sum_at_root(std::int64_t n, std::int64_t d);

/// Whether Phi_{2d} divides num(n, x), by direct reduction.
bool phi2d_divides_num(std::int64_t n, std::int64_t d);

/// Same question through the reduction to num(r, x), r = n mod d: r <= 5 and
/// deg num(r) < phi(2d) settle it without any polynomial work.
bool phi2d_divides_num_reduced(std::int64_t n, std::int64_t d);

}  // namespace subsum
