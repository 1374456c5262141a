#include "format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace calab::cli {

using nlohmann::json;

namespace {

struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string cell_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

Grid flatten(const json& doc) {
  std::vector<json> records;
  if (doc.is_object() && doc.contains("entries") && doc["entries"].is_array()) {
    for (const auto& e : doc["entries"]) records.push_back(e);
  } else if (doc.is_array()) {
    for (const auto& e : doc) records.push_back(e);
  } else {
    records.push_back(doc);
  }

  Grid grid;
  for (const auto& record : records) {
    if (!record.is_object()) continue;
    for (const auto& [key, _] : record.items()) {
      if (std::find(grid.header.begin(), grid.header.end(), key) == grid.header.end()) grid.header.push_back(key);
    }
  }
  for (const auto& record : records) {
    std::vector<std::string> row;
    for (const auto& key : grid.header) {
      row.push_back(record.is_object() && record.contains(key) ? cell_text(record[key]) : "");
    }
    grid.rows.push_back(std::move(row));
  }
  return grid;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string to_csv(const json& doc) {
  const Grid grid = flatten(doc);
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << '\n';
  };
  line(grid.header);
  for (const auto& row : grid.rows) line(row);
  return out.str();
}

std::string to_table(const json& doc) {
  const Grid grid = flatten(doc);
  std::vector<std::size_t> width(grid.header.size(), 0);
  for (std::size_t c = 0; c < grid.header.size(); ++c) {
    width[c] = grid.header[c].size();
    for (const auto& row : grid.rows) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t c = 0; c < fields.size(); ++c) {
      out << (c ? "  " : "") << fields[c];
      if (c + 1 < fields.size()) out << std::string(width[c] - fields[c].size(), ' ');
    }
    out << '\n';
  };
  line(grid.header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : grid.rows) line(row);
  return out.str();
}

}  // namespace calab::cli
