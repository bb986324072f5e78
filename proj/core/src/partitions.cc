#include "subsum/partitions.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace subsum {

std::int64_t p_adic_valuation(std::int64_t n, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("valuation base must be a prime >= 2");
  if (n == 0) throw std::domain_error("valuation of zero is undefined");
  if (n < 0) n = -n;
  std::int64_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::int64_t odd_part(std::int64_t m) {
  if (m <= 0) throw std::domain_error("odd_part requires m >= 1");
  while ((m & 1) == 0) m >>= 1;
  return m;
}

std::int64_t floor_log(std::int64_t base, std::int64_t m) {
  if (base < 2) throw std::invalid_argument("floor_log base must be >= 2");
  if (m < 1) throw std::domain_error("floor_log requires m >= 1");
  std::int64_t k = 0;
  while (m >= base) {
    m /= base;
    ++k;
  }
  return k;
}

std::int64_t floor_lb(std::int64_t m) {
  if (m < 1) throw std::domain_error("floor_lb requires m >= 1");
  std::int64_t k = -1;
  for (auto v = static_cast<std::uint64_t>(m); v != 0; v >>= 1) ++k;
  return k;
}

std::int64_t base_log_sum(std::int64_t b, std::int64_t m) {
  if (b < 2 || m < 0) throw std::domain_error("base_log_sum requires b >= 2 and m >= 0");
  std::int64_t total = 0;
  for (std::int64_t j = 1; j <= m; ++j) {
    if (j % b != 0) total += floor_log(b, b * m / j);
  }
  return total;
}

bool is_power_of(std::int64_t base, std::int64_t m) {
  if (m < 1) return false;
  while (m % base == 0) m /= base;
  return m == 1;
}

DivisorStats divisor_stats(std::int64_t n) {
  if (n < 1) throw std::domain_error("divisor_stats requires n >= 1");
  DivisorStats stats;
  std::vector<std::int64_t> upper;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    stats.divisors.push_back(d);
    if (d != n / d) upper.push_back(n / d);
  }
  stats.divisors.insert(stats.divisors.end(), upper.rbegin(), upper.rend());
  stats.sigma0 = static_cast<std::int64_t>(stats.divisors.size());
  for (auto d : stats.divisors) stats.sigma1 += d;
  return stats;
}

std::int64_t s_value(std::int64_t n) {
  if (n < 1) throw std::domain_error("s(n) requires n >= 1");
  std::int64_t total = 0;
  while ((n & 1) == 0) {
    total += n;
    n >>= 1;
  }
  return total + n;
}

std::int64_t val2_factorial(std::int64_t n) {
  std::int64_t total = 0;
  for (std::int64_t q = n / 2; q > 0; q /= 2) total += q;
  return total;
}

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw std::invalid_argument("partition parts must be nonincreasing");
    }
    weight_ += parts_[k];
  }
}

std::int64_t Partition::mult(std::int64_t i) const {
  auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), i, std::greater<>());
  return static_cast<std::int64_t>(hi - lo);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

PartFamily PartFamily::parts_in(std::vector<std::int64_t> parts) {
  for (auto p : parts) {
    if (p < 1) throw std::invalid_argument("parts-in family needs positive parts");
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  PartFamily family(FamilyKind::PartsIn);
  family.set_ = std::move(parts);
  return family;
}

PartFamily PartFamily::parse(std::string_view name) {
  if (name == "all") return all();
  if (name == "binary") return binary();
  if (name == "ternary") return ternary();
  if (name == "odd") return odd();
  constexpr std::string_view prefix = "parts-in:";
  if (name.starts_with(prefix)) {
    std::vector<std::int64_t> parts;
    std::string_view rest = name.substr(prefix.size());
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto token = rest.substr(0, comma);
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("bad part in family: " + std::string(name));
      }
      parts.push_back(value);
      rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    }
    if (parts.empty()) throw std::invalid_argument("empty parts-in family");
    return parts_in(std::move(parts));
  }
  throw std::invalid_argument("unknown partition family: " + std::string(name));
}

bool PartFamily::allowed(std::int64_t part, std::int64_t n) const {
  if (part < 1 || part > n) return false;
  switch (kind_) {
    case FamilyKind::All:
      return true;
    case FamilyKind::Binary:
      return (part & (part - 1)) == 0;
    case FamilyKind::Ternary:
      return is_power_of(3, part);
    case FamilyKind::Odd:
      return (part & 1) == 1;
    case FamilyKind::PartsIn:
      return std::binary_search(set_.begin(), set_.end(), part);
  }
  return false;
}

std::vector<std::int64_t> PartFamily::allowed_parts(std::int64_t n) const {
  std::vector<std::int64_t> parts;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (allowed(i, n)) parts.push_back(i);
  }
  return parts;
}

std::string PartFamily::name() const {
  switch (kind_) {
    case FamilyKind::All:
      return "all";
    case FamilyKind::Binary:
      return "binary";
    case FamilyKind::Ternary:
      return "ternary";
    case FamilyKind::Odd:
      return "odd";
    case FamilyKind::PartsIn: {
      std::string out = "parts-in:";
      for (std::size_t k = 0; k < set_.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(set_[k]);
      }
      return out;
    }
  }
  return "unknown";
}

namespace {

void visit_rec(std::int64_t remaining, std::size_t max_index,
               const std::vector<std::int64_t>& parts_desc, std::vector<std::int64_t>& current,
               const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(current));
    return;
  }
  for (std::size_t k = max_index; k < parts_desc.size(); ++k) {
    auto part = parts_desc[k];
    if (part > remaining) continue;
    current.push_back(part);
    visit_rec(remaining - part, k, parts_desc, current, visit);
    current.pop_back();
  }
}

}  // namespace

void for_each_partition(std::int64_t n, const PartFamily& family,
                        const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::domain_error("cannot partition a negative integer");
  auto parts = family.allowed_parts(n);
  std::reverse(parts.begin(), parts.end());
  std::vector<std::int64_t> current;
  visit_rec(n, 0, parts, current, visit);
}

std::vector<Partition> enumerate_partitions(std::int64_t n, const PartFamily& family) {
  std::vector<Partition> out;
  for_each_partition(n, family, [&](const Partition& p) { out.push_back(p); });
  return out;
}

BigInt count_partitions(std::int64_t n, const PartFamily& family) {
  if (n < 0) throw std::domain_error("cannot partition a negative integer");
  std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (auto part : family.allowed_parts(n)) {
    for (auto s = part; s <= n; ++s) ways[s] += ways[s - part];
  }
  return ways[n];
}

BigInt count_colored_partitions(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::domain_error("cannot partition a negative integer");
  if (k < 1) throw std::invalid_argument("number of sorts must be >= 1");
  std::vector<BigInt> series(static_cast<std::size_t>(n) + 1, 0);
  series[0] = 1;
  // Multiply by 1/(1 - k x^j): a[s] += k * a[s - j] in increasing s.
  for (std::int64_t j = 1; j <= n; ++j) {
    for (auto s = j; s <= n; ++s) series[s] += k * series[s - j];
  }
  return series[n];
}

}  // namespace subsum
