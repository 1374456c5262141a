#include "calab/rule_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "calab/error.hpp"

namespace calab {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  fail(Errc::schema_error, "field '" + field + "': " + what);
}

std::int64_t require_int(const json& value, const std::string& field) {
  if (!value.is_number_integer()) schema_error(field, "expected an integer");
  return value.get<std::int64_t>();
}

const json& require_field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) schema_error(name, "missing");
  return *it;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

RuleFile rule_from_json(const json& doc) {
  if (!doc.is_object()) schema_error("<root>", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "q" && key != "memory" && key != "table" && key != "group") {
      schema_error(key, "unknown field");
    }
  }

  const std::int64_t q = require_int(require_field(doc, "q"), "q");
  if (q < 1 || q > 65536) schema_error("q", "alphabet size must be in 1..65536");

  const json& memory_json = require_field(doc, "memory");
  if (!memory_json.is_array() || memory_json.empty()) schema_error("memory", "expected a nonempty array");
  std::vector<Offset> memory;
  for (std::size_t i = 0; i < memory_json.size(); ++i) {
    memory.push_back(require_int(memory_json[i], "memory[" + std::to_string(i) + "]"));
  }
  for (std::size_t i = 0; i < memory.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (memory[i] == memory[j]) {
        schema_error("memory[" + std::to_string(i) + "]", "duplicate offset " + std::to_string(memory[i]));
      }
    }
  }

  std::optional<std::int64_t> cyclic;
  if (auto it = doc.find("group"); it != doc.end()) {
    if (!it->is_object() || it->size() != 1 || !it->contains("cyclic")) {
      schema_error("group", "expected {\"cyclic\": m}");
    }
    cyclic = require_int((*it)["cyclic"], "group.cyclic");
    if (*cyclic < 1) schema_error("group.cyclic", "order must be positive");
    for (std::size_t i = 0; i < memory.size(); ++i) {
      if (memory[i] < 0 || memory[i] >= *cyclic) {
        schema_error("memory[" + std::to_string(i) + "]", "element id outside the cyclic group");
      }
    }
  }

  const json& table_json = require_field(doc, "table");
  if (!table_json.is_array()) schema_error("table", "expected an array");
  const std::uint64_t expected = checked_power(static_cast<std::uint64_t>(q), memory.size(), kMaxRuleTable);
  if (expected == 0) schema_error("table", "q^|memory| exceeds the supported table size");
  if (table_json.size() != expected) {
    schema_error("table", "length " + std::to_string(table_json.size()) + " but q^|memory| = " +
                              std::to_string(expected));
  }
  std::vector<Symbol> table;
  table.reserve(table_json.size());
  for (std::size_t i = 0; i < table_json.size(); ++i) {
    const std::int64_t s = require_int(table_json[i], "table[" + std::to_string(i) + "]");
    if (s < 0 || s >= q) schema_error("table[" + std::to_string(i) + "]", "symbol outside 0..q-1");
    table.push_back(static_cast<Symbol>(s));
  }
  return RuleFile{LocalRule(static_cast<std::uint32_t>(q), std::move(memory), std::move(table)), cyclic};
}

RuleFile parse_rule(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    fail(Errc::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                e.what());
  }
  return rule_from_json(doc);
}

RuleFile load_rule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open rule file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_rule(buffer.str());
}

json rule_to_json(const LocalRule& rule, std::optional<std::int64_t> cyclic_group) {
  json doc;
  doc["q"] = rule.q();
  doc["memory"] = rule.memory();
  doc["table"] = rule.table();
  if (cyclic_group) doc["group"] = {{"cyclic", *cyclic_group}};
  return doc;
}

std::string save_rule(const RuleFile& file) { return rule_to_json(file.rule, file.cyclic_group).dump() + "\n"; }

void save_rule(const std::filesystem::path& path, const RuleFile& file) {
  std::ofstream out(path);
  if (!out) fail(Errc::invalid_argument, "cannot write rule file " + path.string());
  out << save_rule(file);
}

std::optional<LocalRule> builtin_rule(std::string_view name) {
  if (name == "identity") return LocalRule::identity();
  if (name == "shift") return LocalRule::shift();
  if (name == "rule150w") return LocalRule::rule150w();
  if (name == "zero") return LocalRule::constant();
  if (name.starts_with("eca:")) {
    const auto digits = name.substr(4);
    std::uint32_t number = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), number);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || number > 255) return std::nullopt;
    return LocalRule::elementary(number);
  }
  return std::nullopt;
}

RuleFile resolve_rule(std::string_view name_or_path) {
  if (auto rule = builtin_rule(name_or_path)) return RuleFile{*rule, std::nullopt};
  return load_rule(std::filesystem::path(name_or_path));
}

}  // namespace calab
