#pragma once

#include <string>

#include "continuum/complex.hpp"
#include "continuum/pattern.hpp"

namespace continuum {

/// Geometric realization of the division at one depth, for the patterns
/// with a declared embedding: the 1- and 2-dimensional grid patterns, the
/// triangle and the carpet. `overlay` draws the adjacency graph on top.
/// Throws UnsupportedPatternError when the pattern has no embedding.
std::string render_pattern_svg(const AdjacencyPattern& pattern, int depth, bool overlay = false);

/// As above with cells filled by their colors (2-dimensional grid pattern
/// and the interval pattern only).
std::string render_complex_svg(const Complex& cx, bool overlay = false);

} // namespace continuum
