#include "subsum/irreducibility.h"

#include <algorithm>
#include <stdexcept>

#include "subsum/cyclo_residue.h"
#include "subsum/cyclotomic.h"

namespace subsum {

namespace {

// Polynomials over F_q, q < 2^32, low coefficient first, no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  b %= q;
  while (e > 0) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) { return pow_mod(a, q - 2, q); }

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
  }
  trim(out);
  return out;
}

// Remainder and (optionally) quotient of a by nonzero b.
ModPoly rem_mod(ModPoly a, const ModPoly& b, std::uint64_t q, ModPoly* quotient = nullptr) {
  const std::size_t db = b.size() - 1;
  const std::uint64_t inv_lead = inv_mod(b.back(), q);
  if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = a.back() * inv_lead % q;
    if (quotient) (*quotient)[shift] = factor;
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = (a[shift + j] + q - factor * b[j] % q) % q;
    }
    trim(a);
  }
  if (quotient) trim(*quotient);
  return a;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t q) {
  while (!b.empty()) {
    ModPoly r = rem_mod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inv_mod(a.back(), q);
    for (auto& c : a) c = c * inv % q;
  }
  return a;
}

ModPoly pow_x_mod(const ModPoly& base, std::uint64_t e, const ModPoly& f, std::uint64_t q) {
  ModPoly result{1};
  ModPoly b = rem_mod(base, f, q);
  while (e > 0) {
    if (e & 1) result = rem_mod(mul_mod(result, b, q), f, q);
    e >>= 1;
    if (e > 0) b = rem_mod(mul_mod(b, b, q), f, q);
  }
  return result;
}

ModPoly sub_mod(ModPoly a, const ModPoly& b, std::uint64_t q) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + q - b[i]) % q;
  trim(a);
  return a;
}

ModPoly derivative_mod(const ModPoly& a, std::uint64_t q) {
  if (a.size() <= 1) return {};
  ModPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * (i % q) % q;
  trim(out);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// All positive divisors of |v|, or nullopt when |v| is too large to factor
// by trial division cheaply.
std::optional<std::vector<BigInt>> small_divisors(const BigInt& v) {
  BigInt a = abs(v);
  if (a == 0 || a > BigInt("1000000000000")) return std::nullopt;
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  return out;
}

// A rational root a/b of f, if trial over divisor pairs finds one.
std::optional<std::string> find_rational_root(const DensePoly& f) {
  const auto coeffs = f.coeffs();
  if (coeffs[0] == 0) return std::string("0");
  auto num_divs = small_divisors(coeffs[0]);
  auto den_divs = small_divisors(f.leading());
  if (!num_divs || !den_divs || num_divs->size() * den_divs->size() > 20000) return std::nullopt;
  const auto deg = static_cast<std::uint64_t>(f.degree());
  for (const auto& b : *den_divs) {
    for (const auto& a0 : *num_divs) {
      if (gcd(a0, b) != 1) continue;
      for (int sign : {1, -1}) {
        const BigInt a = a0 * sign;
        // b^deg f(a/b) = sum c_k a^k b^{deg-k}.
        BigInt acc = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
          acc += coeffs[k] * pow_big(a, k) * pow_big(b, deg - k);
        }
        if (acc == 0) return a.get_str() + "/" + b.get_str();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(IrreducibilityVerdict v) {
  switch (v) {
    case IrreducibilityVerdict::Irreducible:
      return "irreducible";
    case IrreducibilityVerdict::Reducible:
      return "reducible";
    case IrreducibilityVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::optional<std::vector<std::int64_t>> factor_degrees_mod(const DensePoly& p, std::uint64_t q) {
  if (q < 2 || q >= (std::uint64_t{1} << 32)) throw std::invalid_argument("modulus must be a prime below 2^32");
  ModPoly f;
  for (const auto& c : p.coeffs()) {
    BigInt r = c % BigInt(static_cast<unsigned long>(q));
    if (r < 0) r += static_cast<unsigned long>(q);
    f.push_back(r.get_ui());
  }
  trim(f);
  if (f.size() != p.size() || f.size() < 2) return std::nullopt;
  if (gcd_mod(f, derivative_mod(f, q), q).size() != 1) return std::nullopt;
  {
    const std::uint64_t inv = inv_mod(f.back(), q);
    for (auto& c : f) c = c * inv % q;
  }

  // Distinct-degree factorization: gcd(f, x^{q^i} - x) collects the factors
  // of degree i once the smaller ones are removed.
  std::vector<std::int64_t> degrees;
  const ModPoly x{0, 1};
  ModPoly h = rem_mod(x, f, q);
  for (std::int64_t i = 1; static_cast<std::int64_t>(f.size()) - 1 >= 2 * i; ++i) {
    h = pow_x_mod(h, q, f, q);
    ModPoly g = gcd_mod(f, sub_mod(h, x, q), q);
    const auto dg = static_cast<std::int64_t>(g.size()) - 1;
    if (dg > 0) {
      for (std::int64_t k = 0; k < dg / i; ++k) degrees.push_back(i);
      ModPoly quotient;
      rem_mod(f, g, q, &quotient);
      f = std::move(quotient);
      h = rem_mod(h, f, q);
    }
  }
  if (f.size() > 1) degrees.push_back(static_cast<std::int64_t>(f.size()) - 1);
  return degrees;
}

IrreducibilityResult probable_irreducibility(const DensePoly& p, const IrreducibilityOptions& options) {
  if (p.is_zero()) throw std::invalid_argument("the zero polynomial has no factorization");
  IrreducibilityResult result;
  result.content = content(p);
  const DensePoly f = primitive_part(p);
  const std::int64_t deg = f.degree();
  if (deg < 1) throw std::invalid_argument("probable_irreducibility needs degree >= 1");
  if (deg == 1) {
    result.verdict = IrreducibilityVerdict::Irreducible;
    return result;
  }

  if (auto root = find_rational_root(f)) {
    result.verdict = IrreducibilityVerdict::Reducible;
    result.witness_degree = 1;
    result.witness = "rational root " + *root;
    return result;
  }
  for (std::int64_t e = 1; e <= 2 * deg + 2; ++e) {
    if (euler_phi(e) >= deg) continue;
    if (reduce_mod_cyclotomic(f, e).is_zero()) {
      result.verdict = IrreducibilityVerdict::Reducible;
      result.witness_degree = euler_phi(e);
      result.witness = "Phi_" + std::to_string(e);
      return result;
    }
  }

  // possible[k]: a factor of degree k is still consistent with every prime.
  std::vector<bool> possible(static_cast<std::size_t>(deg) + 1, true);
  auto open_count = [&] {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k < deg; ++k) count += possible[static_cast<std::size_t>(k)] ? 1 : 0;
    return count;
  };
  std::size_t tried = 0;
  for (std::uint64_t q = static_cast<std::uint64_t>(deg) + 1; result.primes_used.size() < options.max_primes; ++q) {
    if (!is_prime(q)) continue;
    if (++tried > 20 * options.max_primes) break;
    auto degrees = factor_degrees_mod(f, q);
    if (!degrees) continue;
    std::vector<bool> sums(static_cast<std::size_t>(deg) + 1, false);
    sums[0] = true;
    for (auto d : *degrees) {
      for (std::int64_t k = deg; k >= d; --k) {
        if (sums[static_cast<std::size_t>(k - d)]) sums[static_cast<std::size_t>(k)] = true;
      }
    }
    for (std::int64_t k = 1; k < deg; ++k) {
      if (!sums[static_cast<std::size_t>(k)]) possible[static_cast<std::size_t>(k)] = false;
    }
    result.primes_used.push_back(q);
    if (open_count() == 0) {
      result.verdict = IrreducibilityVerdict::Irreducible;
      return result;
    }
  }
  for (std::int64_t k = 1; k < deg; ++k) {
    if (possible[static_cast<std::size_t>(k)]) result.open_degrees.push_back(k);
  }
  result.verdict = IrreducibilityVerdict::Inconclusive;
  return result;
}

}  // namespace subsum
