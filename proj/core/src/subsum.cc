#include "subsum/subsum.h"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "subsum/store.h"

namespace subsum {

namespace {

void require_nonnegative(std::int64_t n) {
  if (n < 0) throw std::domain_error("n must be >= 0");
}

BinomialProduct den_closed(std::int64_t n) {
  BinomialProduct den;
  for (std::int64_t i = 1; i <= n; ++i) den.add(i, den_exponent(n, i));
  return den;
}

CycloResidue residue_pow(CycloResidue base, std::int64_t e) {
  CycloResidue result = CycloResidue::constant(base.modulus_index(), 1);
  while (e > 0) {
    if (e & 1) result = residue_mul(result, base);
    e >>= 1;
    if (e > 0) base = residue_mul(base, base);
  }
  return result;
}

// DP over parts in descending order. T[s] collects, for every way of
// choosing the multiplicities of the parts seen so far with weight n - s,
// the product of their (1 + x^i)^{floor(n/i) - m_i} factors.
DensePoly num_star_dp(std::int64_t n, const PartFamily& family) {
  auto parts = family.allowed_parts(n);
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<DensePoly> table(size);
  table[static_cast<std::size_t>(n)] = DensePoly{1};
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const std::int64_t i = *it;
    const std::int64_t k = n / i;
    const auto step = static_cast<std::size_t>(i);
    std::vector<DensePoly> next(size);
    for (std::int64_t s = 0; s <= n; ++s) {
      const std::int64_t top = (n - s) / i;
      // Horner in (1 + x^i): after the loop T[s + m i] carries power top - m.
      DensePoly acc;
      for (std::int64_t m = 0; m <= top; ++m) {
        acc.mul_binomial(step);
        acc += table[static_cast<std::size_t>(s + m * i)];
      }
      if (acc.is_zero()) continue;
      acc.mul_binomial(step, k - top);
      next[static_cast<std::size_t>(s)] = std::move(acc);
    }
    table = std::move(next);
  }
  return table[0];
}

DensePoly num_star_naive(std::int64_t n, const PartFamily& family) {
  DensePoly total;
  for_each_partition(n, family, [&](const Partition& lambda) { total += fbp_expand(h_product(n, lambda, family)); });
  return total;
}

struct TripleMemo {
  std::shared_mutex mutex;
  std::map<std::pair<std::string, std::int64_t>, std::shared_ptr<const NumDenTriple>> entries;
};

TripleMemo& triple_memo() {
  static TripleMemo memo;
  return memo;
}

DensePoly compute_num(std::int64_t n, const PartFamily& family, const BinomialProduct& g) {
  DensePoly num = num_star(n, family, NumStarStrategy::PartDP);
  for (const auto& [i, e] : g.entries()) num.div_binomial(static_cast<std::size_t>(i), e);
  return num;
}

}  // namespace

DensePoly sp_poly(const Partition& lambda) {
  DensePoly out{1};
  for (auto part : lambda.parts()) out.mul_binomial(static_cast<std::size_t>(part));
  return out;
}

BinomialProduct h_product(std::int64_t n, const Partition& lambda, const PartFamily& family) {
  require_nonnegative(n);
  if (lambda.weight() != n) {
    throw std::invalid_argument("partition " + lambda.to_string() + " does not have weight " + std::to_string(n));
  }
  for (auto part : lambda.parts()) {
    if (!family.allowed(part, n)) {
      throw std::invalid_argument("part " + std::to_string(part) + " is not allowed in family " + family.name());
    }
  }
  BinomialProduct h;
  for (auto i : family.allowed_parts(n)) h.add(i, n / i - lambda.mult(i));
  return h;
}

BinomialProduct den_star(std::int64_t n, const PartFamily& family) {
  require_nonnegative(n);
  BinomialProduct den;
  for (auto i : family.allowed_parts(n)) den.add(i, n / i);
  return den;
}

DensePoly num_star(std::int64_t n, const PartFamily& family, NumStarStrategy strategy) {
  require_nonnegative(n);
  if (strategy == NumStarStrategy::Naive) return num_star_naive(n, family);
  return num_star_dp(n, family);
}

BinomialProduct big_g(std::int64_t n, const PartFamily& family, GStrategy strategy) {
  require_nonnegative(n);
  if (strategy == GStrategy::ClosedForm) {
    if (family.kind() != FamilyKind::All) {
      throw std::invalid_argument("the closed form for G is only available for the family 'all'");
    }
    BinomialProduct g;
    for (std::int64_t i = 1; i <= n; ++i) g.add(i, c_exponent(n, i));
    return g;
  }
  std::vector<BinomialProduct> hs;
  for_each_partition(n, family, [&](const Partition& lambda) { hs.push_back(h_product(n, lambda, family)); });
  if (hs.empty()) {
    throw std::domain_error("family " + family.name() + " has no partition of " + std::to_string(n));
  }
  return fbp_gcd(hs);
}

std::int64_t c_exponent(std::int64_t n, std::int64_t i) {
  if (i < 1 || i > n) throw std::domain_error("c_{n,i} requires 1 <= i <= n");
  const std::int64_t q = n / i;
  return q - floor_lb(q) - 1;
}

std::vector<std::int64_t> c_row(std::int64_t n) {
  require_nonnegative(n);
  std::vector<std::int64_t> row;
  for (std::int64_t i = 1; i <= n / 3; ++i) row.push_back(c_exponent(n, i));
  return row;
}

std::int64_t den_exponent(std::int64_t n, std::int64_t i) {
  if (i < 1 || i > n) throw std::domain_error("a_{n,i} requires 1 <= i <= n");
  return floor_lb(n / i) + 1;
}

std::shared_ptr<const NumDenTriple> num_den(std::int64_t n, const PartFamily& family) {
  require_nonnegative(n);
  auto& memo = triple_memo();
  const auto key = std::make_pair(family.name(), n);
  {
    std::shared_lock lock(memo.mutex);
    auto it = memo.entries.find(key);
    if (it != memo.entries.end()) return it->second;
  }

  auto triple = std::make_shared<NumDenTriple>();
  triple->n = n;
  triple->family = family;
  if (family.kind() == FamilyKind::All) {
    triple->g = big_g(n, family, GStrategy::ClosedForm);
    triple->den = den_closed(n);
  } else {
    triple->g = big_g(n, family, GStrategy::Oracle);
    triple->den = den_star(n, family) - triple->g;
  }

  const CacheKey store_key{"num", family.name(), n, "partdp"};
  auto store = installed_poly_store();
  std::optional<DensePoly> stored;
  if (store) stored = store->load(store_key);
  if (stored) {
    triple->num = std::move(*stored);
  } else {
    triple->num = compute_num(n, family, triple->g);
    if (store) store->save(store_key, triple->num);
  }

  std::unique_lock lock(memo.mutex);
  auto [it, inserted] = memo.entries.try_emplace(key, std::move(triple));
  return it->second;
}

void clear_subsum_caches() {
  auto& memo = triple_memo();
  std::unique_lock lock(memo.mutex);
  memo.entries.clear();
}

BinomialProduct quotient_qg(std::int64_t n) {
  if (n < 1) throw std::domain_error("quotient_qg requires n >= 1");
  const std::int64_t o = odd_part(n);
  BinomialProduct q;
  for (auto d : divisor_stats(n).divisors) {
    if (d % o != 0) q.add(d, 1);
  }
  return q;
}

CycloFactored quotient_qd(std::int64_t n) {
  if (n < 1) throw std::domain_error("quotient_qd requires n >= 1");
  CycloFactored q;
  for (auto d : divisor_stats(n).divisors) q.add(2 * d, 1);
  return q;
}

DegreeStats degree_stats(std::int64_t n) {
  require_nonnegative(n);
  std::int64_t sum_s = 0;
  std::int64_t sum_o = 0;
  std::int64_t sum_lb = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    sum_s += s_value(i);
    sum_o += odd_part(i);
    sum_lb += i * floor_lb(n / i);
  }
  const std::int64_t via_s = sum_s;
  const std::int64_t via_o = n * (n + 1) - sum_o;
  const std::int64_t via_lb = n * (n + 1) / 2 + sum_lb;
  const std::int64_t via_product = binomial_degree(den_closed(n));
  if (via_s != via_o || via_o != via_lb || via_lb != via_product) {
    throw std::logic_error("degree formulas for den(" + std::to_string(n) + ") disagree");
  }
  const std::int64_t num_via_o = n * n - sum_o;
  const std::int64_t num_via_lb = n * (n - 1) / 2 + sum_lb;
  if (num_via_o != num_via_lb || num_via_o != via_s - n) {
    throw std::logic_error("degree formulas for num(" + std::to_string(n) + ") disagree");
  }
  return DegreeStats{via_s, num_via_o};
}

CycloFactored f_factor(std::int64_t n, std::int64_t d) {
  if (d < 1 || d > n) throw std::domain_error("f(n, d) requires 1 <= d <= n");
  const std::int64_t q = n / d;
  const std::int64_t r = n - q * d;
  BinomialProduct f = den_closed(n);
  f.add(d, -q);
  f -= den_closed(r);
  return fbp_to_cyclo(f);
}

CycloResidue num_at_root(std::int64_t n, std::int64_t m) {
  return reduce_mod_cyclotomic(num_den(n)->num, m);
}

NumrIdentity numr_identity_check(std::int64_t n, std::int64_t d) {
  if (d < 1 || d > n) throw std::domain_error("the reduction identity requires 1 <= d <= n");
  const std::int64_t m = 2 * d;
  const std::int64_t q = n / d;
  const std::int64_t r = n - q * d;
  CycloResidue lhs = num_at_root(n, m);
  const auto one = CycloResidue::constant(m, 1);
  for (std::int64_t j = r + 1; j <= n; ++j) {
    lhs = residue_mul(lhs, residue_sub(one, CycloResidue::root_power(m, odd_part(j))));
  }
  const BigInt scale = pow_big(BigInt(m), static_cast<std::uint64_t>(q)) * factorial(q);
  CycloResidue rhs = residue_scale(num_at_root(r, m), scale);
  const bool holds = lhs == rhs;
  return NumrIdentity{holds, std::move(lhs), std::move(rhs)};
}

CycloFactored q_lambda(std::int64_t n, const Partition& lambda) {
  return fbp_to_cyclo(h_product(n, lambda, PartFamily::all())) - fbp_to_cyclo(big_g(n, PartFamily::all(), GStrategy::ClosedForm));
}

CycloResidue restricted_sum_at_root(std::int64_t n, std::int64_t d) {
  if (d < 1 || d > n) throw std::domain_error("the restricted sum requires 1 <= d <= n");
  const std::int64_t m = 2 * d;
  const std::int64_t q = n / d;
  const std::int64_t r = n - q * d;
  const CycloFactored g = fbp_to_cyclo(big_g(n, PartFamily::all(), GStrategy::ClosedForm));
  std::map<std::int64_t, CycloResidue> factor_residues;
  CycloResidue total = CycloResidue::constant(m, 0);
  for_each_partition(r, PartFamily::all(), [&](const Partition& mu) {
    std::vector<std::int64_t> parts(static_cast<std::size_t>(q), d);
    parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
    const CycloFactored ql = fbp_to_cyclo(h_product(n, Partition(std::move(parts)), PartFamily::all())) - g;
    CycloResidue term = CycloResidue::constant(m, 1);
    for (const auto& [e, k] : ql.entries()) {
      if (k < 0) throw std::logic_error("q_lambda is not a polynomial: G(n) does not divide h_lambda");
      auto it = factor_residues.find(e);
      if (it == factor_residues.end()) it = factor_residues.emplace(e, reduce_mod_cyclotomic(cyclotomic(e), m)).first;
      term = residue_mul(term, residue_pow(it->second, k));
      if (term.is_zero()) break;
    }
    total = residue_add(total, term);
  });
  return total;
}

bool phi2d_divides_num(std::int64_t n, std::int64_t d) {
  if (d < 1) throw std::domain_error("d must be >= 1");
  return num_at_root(n, 2 * d).is_zero();
}

bool phi2d_divides_num_reduced(std::int64_t n, std::int64_t d) {
  if (d < 1 || d > n) throw std::domain_error("the reduction requires 1 <= d <= n");
  const std::int64_t r = n % d;
  // num(r) is a unit, 2 Phi_3, or irreducible of degree > 2 and not cyclotomic.
  if (r <= 5) return false;
  if (degree_stats(r).deg_num < euler_phi(2 * d)) return false;
  return num_at_root(r, 2 * d).is_zero();
}

}  // namespace subsum
