#include "bfile.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "subsum/binary.h"
#include "subsum/partitions.h"

namespace subsum::cli {

std::vector<std::pair<std::int64_t, BigInt>> parse_bfile(std::istream& in) {
  std::vector<std::pair<std::int64_t, BigInt>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_text;
    std::string value_text;
    std::string extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra)) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": expected \"index value\"");
    }
    try {
      std::size_t used = 0;
      const std::int64_t index = std::stoll(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument("index");
      out.emplace_back(index, from_decimal(value_text));
    } catch (const std::exception&) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": not an integer pair");
    }
  }
  return out;
}

std::vector<std::string> sequence_names() { return {"s", "d-half", "B", "sigma1-sum"}; }

bool known_sequence(std::string_view name) {
  for (const auto& s : sequence_names()) {
    if (s == name) return true;
  }
  return false;
}

std::vector<std::optional<BigInt>> sequence_terms(std::string_view name, std::int64_t max_n) {
  if (!known_sequence(name)) throw std::invalid_argument("unknown sequence " + std::string(name));
  const auto size = static_cast<std::size_t>(std::max<std::int64_t>(max_n, 0)) + 1;
  std::vector<std::optional<BigInt>> out(size);
  if (max_n < 0) return out;
  if (name == "s") {
    for (std::int64_t n = 1; n <= max_n; ++n) out[static_cast<std::size_t>(n)] = BigInt(s_value(n));
  } else if (name == "d-half") {
    for (std::int64_t n = 0; n <= max_n; ++n) out[static_cast<std::size_t>(n)] = BigInt(d_degree(n) / 2);
  } else if (name == "B") {
    const auto counts = binary_partition_counts(max_n);
    for (std::size_t n = 0; n < size; ++n) out[n] = counts[n];
  } else {
    // sigma_1 by a divisor sieve, then prefix sums.
    std::vector<BigInt> sigma(size, 0);
    for (std::int64_t d = 1; d <= max_n; ++d) {
      for (std::int64_t m = d; m <= max_n; m += d) sigma[static_cast<std::size_t>(m)] += d;
    }
    BigInt total = 0;
    for (std::size_t n = 0; n < size; ++n) {
      total += sigma[n];
      out[n] = total;
    }
  }
  return out;
}

}  // namespace subsum::cli
