#pragma once

// Rule files:
//   { "q": int, "memory": [int...], "table": [int...] }
// optionally with "group": {"cyclic": m}, in which case the memory lists
// element ids of the cyclic group of order m.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "calab/ca_core.hpp"

namespace calab {

struct RuleFile {
  LocalRule rule;
  std::optional<std::int64_t> cyclic_group;

  friend bool operator==(const RuleFile&, const RuleFile&) = default;
};

/// Throws ParseError (malformed JSON, with line and column) or SchemaError
/// (naming the offending field).
RuleFile parse_rule(std::string_view text);
RuleFile rule_from_json(const nlohmann::json& doc);
RuleFile load_rule(const std::filesystem::path& path);

nlohmann::json rule_to_json(const LocalRule& rule, std::optional<std::int64_t> cyclic_group = std::nullopt);
std::string save_rule(const RuleFile& file);
void save_rule(const std::filesystem::path& path, const RuleFile& file);

/// Built-in rules addressable by name: "identity", "shift", "rule150w",
/// "zero" (constant 0) and "eca:N" for N in 0..255.
std::optional<LocalRule> builtin_rule(std::string_view name);

/// A built-in name or a path to a rule file.
RuleFile resolve_rule(std::string_view name_or_path);

}  // namespace calab
