#pragma once

#include <string>

#include <json.hpp>

#include "continuum/function.hpp"

namespace continuum {

/// Function table file schema:
///   {
///     "domain": "euclid1",    // built-in name or inline pattern
///     "codomain": "euclid1",
///     "k_max": 3,
///     "map": {"": "", "a": "a", "a.b": "a.a", ...}
///   }
/// The map must cover every domain cell up to k_max (the empty key is the
/// unit).
nlohmann::ordered_json function_to_json(const CellFunction& f);
CellFunction function_from_json(const nlohmann::json& j);

std::string save_function(const CellFunction& f);
CellFunction parse_function(const std::string& text);
CellFunction load_function(const std::string& path);

} // namespace continuum
