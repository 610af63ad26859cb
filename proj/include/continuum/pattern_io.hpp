#pragma once

#include <string>

#include <json.hpp>

#include "continuum/pattern.hpp"

namespace continuum {

/// Pattern file schema:
///   {
///     "name": "euclid2",
///     "alphabet": ["a", "b", "c", "d"],
///     "adj_d": [["a","b"], ...],
///     "m_rules": [{"key": ["a","b"], "children": [["b","a"], ...]}, ...],
///     "gluing": {"kind": "sphere_corner", "corner": "a"},   // optional
///     "sibling_extras": [["a","d"], ...]                    // optional
///   }
/// The alphabet order defines the lexicographic order. Unknown fields are
/// rejected.
nlohmann::ordered_json pattern_to_json(const AdjacencyPattern& pattern);
AdjacencyPattern pattern_from_json(const nlohmann::json& j);

std::string save_pattern(const AdjacencyPattern& pattern);
AdjacencyPattern parse_pattern(const std::string& text);

/// A built-in name, or a path to a pattern file.
AdjacencyPattern load_pattern(const std::string& name_or_path);

/// Pattern given inline as an object or by built-in name as a string.
AdjacencyPattern pattern_from_json_ref(const nlohmann::json& j);

} // namespace continuum
