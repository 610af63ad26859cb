#pragma once

#include <string>

#include <json.hpp>

#include "continuum/complex.hpp"

namespace continuum {

/// Complex file schema:
///   {
///     "pattern": "euclid2",          // built-in name or inline pattern
///     "depth": 2,
///     "default": 1,                  // color of unlisted cells
///     "colors": {"a.d": 2, ...},     // per-cell overrides
///     "palette": 2                   // optional, defaults to 2
///   }
nlohmann::ordered_json complex_to_json(const Complex& cx);
Complex complex_from_json(const nlohmann::json& j);

std::string save_complex(const Complex& cx);
Complex parse_complex(const std::string& text);
Complex load_complex(const std::string& path);

/// Loads a PBM/PGM image (P1, P2, P4 or P5) of size 2^k x 2^k as a 2-color
/// depth-k coloring of the 2-dimensional grid pattern: sample value 0 maps
/// to black, anything else to white. Image rows run top to bottom.
Complex complex_from_image(const std::string& path);

} // namespace continuum
