#include "records.h"

#include <stdexcept>

namespace subsum::cli {

namespace {

std::string scalar_text(const Record& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::vector<std::string> scalar_keys(const Record& record) {
  std::vector<std::string> keys;
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (!it.value().is_structured()) keys.push_back(it.key());
  }
  return keys;
}

const Record* collection_of(const Record& record, std::string* name) {
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (it.value().is_structured()) {
      *name = it.key();
      return &it.value();
    }
  }
  return nullptr;
}

void write_row(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k > 0) out << ',';
    out << csv_escape(cells[k]);
  }
  out << '\n';
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (json or csv)");
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_records(const std::vector<Record>& records, Format format, std::ostream& out) {
  if (format == Format::Json) {
    for (const auto& r : records) out << r.dump() << '\n';
    return;
  }
  if (records.empty()) return;
  std::string field;
  const bool expanded = collection_of(records.front(), &field) != nullptr;
  auto header = scalar_keys(records.front());
  if (expanded) {
    header.push_back("field");
    header.push_back("index");
    header.push_back("value");
  }
  write_row(header, out);
  for (const auto& r : records) {
    std::vector<std::string> base;
    for (const auto& key : scalar_keys(records.front())) base.push_back(r.contains(key) ? scalar_text(r.at(key)) : "");
    const Record* items = collection_of(r, &field);
    if (!expanded || items == nullptr) {
      write_row(base, out);
      continue;
    }
    if (items->is_array()) {
      for (std::size_t k = 0; k < items->size(); ++k) {
        auto row = base;
        row.push_back(field);
        row.push_back(std::to_string(k));
        row.push_back(scalar_text((*items)[k]));
        write_row(row, out);
      }
    } else {
      for (auto it = items->begin(); it != items->end(); ++it) {
        auto row = base;
        row.push_back(field);
        row.push_back(it.key());
        row.push_back(scalar_text(it.value()));
        write_row(row, out);
      }
    }
  }
}

}  // namespace subsum::cli
