#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace calab::cli {

/// Rows of a report: its "entries" when present, otherwise the document
/// itself. Scalars stay as they are, nested values become compact JSON.
std::string to_csv(const nlohmann::json& doc);
std::string to_table(const nlohmann::json& doc);

}  // namespace calab::cli
