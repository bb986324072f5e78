#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace subsum::cli {

using Record = nlohmann::ordered_json;

enum class Format { Json, Csv };

/// Parses "json" or "csv"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// JSON: one compact object per line. CSV: a header row, then one row per
/// record; the first array or object field of a record is expanded to one
/// row per element with columns field, index, value.
void write_records(const std::vector<Record>& records, Format format, std::ostream& out);

std::string csv_escape(const std::string& cell);

}  // namespace subsum::cli
