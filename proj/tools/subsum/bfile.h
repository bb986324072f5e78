#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subsum/bigint.h"

namespace subsum::cli {

/// Reads "index value" lines; blank lines and lines starting with '#' are
/// skipped. Throws std::invalid_argument naming the offending line.
std::vector<std::pair<std::int64_t, BigInt>> parse_bfile(std::istream& in);

/// Sequences a b-file can be compared against: "s" (s(n)), "d-half"
/// (d(n)/2), "B" (binary partitions), "sigma1-sum" (sum of sigma_1(i), i <= n).
bool known_sequence(std::string_view name);
std::vector<std::string> sequence_names();

/// Terms 0..max_n; entries outside the sequence's domain are nullopt.
std::vector<std::optional<BigInt>> sequence_terms(std::string_view name, std::int64_t max_n);

}  // namespace subsum::cli
