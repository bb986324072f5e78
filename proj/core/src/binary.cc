#include "subsum/binary.h"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "subsum/cyclo_residue.h"
#include "subsum/store.h"
#include "subsum/subsum.h"

namespace subsum {

namespace {

// chain[j] = num_B(2j), extended on demand.
struct BinaryMemo {
  std::mutex mutex;
  std::vector<DensePoly> chain;
};

BinaryMemo& binary_memo() {
  static BinaryMemo memo;
  return memo;
}

DensePoly num_b_recurrence(std::int64_t n) {
  const auto target = static_cast<std::size_t>(n / 2);
  auto& memo = binary_memo();
  std::lock_guard lock(memo.mutex);
  auto& chain = memo.chain;
  if (chain.empty()) chain.push_back(DensePoly{1});
  while (chain.size() <= target) {
    const auto j = static_cast<std::int64_t>(chain.size());  // computing num_B(2j)
    DensePoly next = poly_compose_power(chain[static_cast<std::size_t>(j / 2)], 2);
    next.mul_binomial(1, 2 * j);
    DensePoly tail = fbp_expand(f_even_factor(2 * j));
    next += poly_mul(tail, chain.back());
    chain.push_back(std::move(next));
  }
  return chain[target];
}

std::int64_t power_of_two(std::int64_t i) { return std::int64_t{1} << i; }

}  // namespace

DensePoly num_b(std::int64_t n, NumBStrategy strategy) {
  if (n < 0) throw std::domain_error("num_b requires n >= 0");
  if (strategy == NumBStrategy::Naive) return num_star(n, PartFamily::binary(), NumStarStrategy::Naive);

  const CacheKey key{"num-b", "binary", n, "recurrence"};
  auto store = installed_poly_store();
  if (store) {
    if (auto hit = store->load(key)) return *hit;
  }
  DensePoly value = num_b_recurrence(n);
  if (store) store->save(key, value);
  return value;
}

BinomialProduct f_even_factor(std::int64_t two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw std::invalid_argument("f_{2n} needs an even argument >= 2");
  BinomialProduct f;
  const std::int64_t v = p_adic_valuation(two_n, 2);
  for (std::int64_t i = 1; i <= v; ++i) f.add(power_of_two(i), 1);
  return f;
}

std::int64_t d_degree(std::int64_t n, DDegreeStrategy strategy) {
  if (n < 0) throw std::domain_error("d(n) requires n >= 0");
  std::int64_t total = 0;
  switch (strategy) {
    case DDegreeStrategy::Sum:
      for (std::int64_t p = 2; p <= n; p *= 2) total += p * (n / p);
      return total;
    case DDegreeStrategy::Recursion:
      return n < 2 ? 0 : 2 * (d_degree(n / 2, DDegreeStrategy::Recursion) + n / 2);
    case DDegreeStrategy::Digits:
      for (std::int64_t i = 0, m = n; m > 0; ++i, m >>= 1) {
        if (m & 1) total += i * power_of_two(i);
      }
      return total;
  }
  throw std::invalid_argument("unknown d(n) strategy");
}

std::vector<BigInt> binary_partition_counts(std::int64_t n) {
  if (n < 0) throw std::domain_error("B(n) requires n >= 0");
  std::vector<BigInt> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    b[idx] = (k % 2 == 1) ? b[idx - 1] : b[idx - 1] + b[idx / 2];
  }
  return b;
}

BigInt b_closed(std::int64_t n, int k) {
  if (n < 0) throw std::domain_error("b_k(n) requires n >= 0");
  const auto b = binary_partition_counts(n);
  switch (k) {
    case 0:
      return b.back();
    case 1: {
      BigInt below = 0;
      for (std::int64_t j = 0; j < n; ++j) below += b[static_cast<std::size_t>(j)];
      return BigInt(n) * b.back() - below;
    }
    case 2: {
      BigInt total = 0;
      for (std::int64_t j = 0; j <= n / 2; ++j) total += BigInt(2 * j * j) * b[static_cast<std::size_t>(j)];
      return total;
    }
    default:
      throw std::invalid_argument("closed forms exist for k = 0, 1, 2 only");
  }
}

BigInt b1_half_sum(std::int64_t n) {
  if (n < 0) throw std::domain_error("b_1(n) requires n >= 0");
  const auto b = binary_partition_counts(n);
  BigInt total = 0;
  for (std::int64_t j = 0; j <= n / 2; ++j) total += BigInt(2 * j) * b[static_cast<std::size_t>(j)];
  return total;
}

PairCover pair_cover(std::int64_t n) {
  if (n < 2) throw std::domain_error("pair_cover requires n >= 2");
  const auto all = enumerate_partitions(n, PartFamily::binary());
  std::map<Partition, std::size_t> index;
  for (std::size_t k = 0; k < all.size(); ++k) index.emplace(all[k], k);
  std::vector<bool> used(all.size(), false);
  std::size_t remaining = all.size();

  PairCover cover;
  cover.n = n;
  for (std::int64_t i = floor_lb(n); i >= 1 && remaining > 0; --i) {
    const std::int64_t top = power_of_two(i);
    for (std::int64_t m = n / top; m >= 1 && remaining > 0; --m) {
      for (std::size_t k = 0; k < all.size(); ++k) {
        const Partition& lambda = all[k];
        if (used[k] || lambda.largest() != top || lambda.mult(top) != m) continue;
        std::vector<std::int64_t> parts(lambda.parts().begin(), lambda.parts().end());
        // Parts are nonincreasing, so the first part is a 2^i; the two halves
        // go right after the remaining 2^i parts.
        parts.erase(parts.begin());
        auto pos = parts.begin() + (m - 1);
        parts.insert(pos, 2, top / 2);
        Partition mate(std::move(parts));
        auto it = index.find(mate);
        if (it == index.end() || used[it->second]) {
          throw std::logic_error("pairing stalled at " + lambda.to_string() + " for n = " + std::to_string(n));
        }
        used[k] = true;
        used[it->second] = true;
        remaining -= 2;
        cover.pairs.push_back(PairCoverEntry{lambda, std::move(mate), i});
      }
    }
  }
  if (remaining != 0) throw std::logic_error("pairing left partitions of " + std::to_string(n) + " unmatched");
  return cover;
}

bool verify_pair_cover(const PairCover& cover) {
  const auto all = enumerate_partitions(cover.n, PartFamily::binary());
  std::map<Partition, int> seen;
  for (const auto& entry : cover.pairs) {
    if (entry.i < 1 || entry.lambda.mult(power_of_two(entry.i)) == 0) return false;
    std::vector<std::int64_t> parts(entry.lambda.parts().begin(), entry.lambda.parts().end());
    auto it = std::find(parts.begin(), parts.end(), power_of_two(entry.i));
    parts.erase(it);
    parts.push_back(power_of_two(entry.i - 1));
    parts.push_back(power_of_two(entry.i - 1));
    std::sort(parts.begin(), parts.end(), std::greater<>());
    if (Partition(parts) != entry.mate) return false;
    ++seen[entry.lambda];
    ++seen[entry.mate];
    const auto family = PartFamily::binary();
    DensePoly sum = fbp_expand(h_product(cover.n, entry.lambda, family));
    sum += fbp_expand(h_product(cover.n, entry.mate, family));
    if (!reduce_mod_cyclotomic(sum, 3).is_zero()) return false;
  }
  if (seen.size() != all.size()) return false;
  for (const auto& lambda : all) {
    auto it = seen.find(lambda);
    if (it == seen.end() || it->second != 1) return false;
  }
  return true;
}

BinaryDivisibilityReport binary_divisibility(std::int64_t n) {
  if (n < 1) throw std::domain_error("binary_divisibility requires n >= 1");
  const DensePoly num = num_b(n);
  BinaryDivisibilityReport report;
  report.n = n;
  report.third_root_divides = reduce_mod_cyclotomic(num, 3).is_zero();
  for (std::int64_t i = 0; power_of_two(i) <= n; ++i) {
    // 1 + x^{2^i} is the single cyclotomic factor Phi_{2^{i+1}}.
    report.binomial_divides.emplace_back(i, reduce_mod_cyclotomic(num, power_of_two(i + 1)).is_zero());
  }
  return report;
}

bool binary_binomial_divides_reduced(std::int64_t n, std::int64_t i) {
  if (n < 1 || i < 0 || power_of_two(i) > n) throw std::domain_error("need 1 <= 2^i <= n");
  const std::int64_t r = n % power_of_two(i);
  if (d_degree(r) < power_of_two(i)) return false;
  return reduce_mod_cyclotomic(num_b(r), power_of_two(i + 1)).is_zero();
}

void clear_binary_caches() {
  auto& memo = binary_memo();
  std::lock_guard lock(memo.mutex);
  memo.chain.clear();
}

}  // namespace subsum
