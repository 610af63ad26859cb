#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "continuum/pattern.hpp"

namespace continuum {

/// The n-dimensional grid pattern: 2^n parts indexed by position tuples in
/// {0,1}^n (bit j of a symbol id is its coordinate along axis j), base
/// adjacency between tuples differing in one coordinate, and merge rules
/// derived from face contact with matching transverse coordinates.
AdjacencyPattern euclid(int n);

/// Three pairwise adjacent parts; after a division, sub-parts touch at
/// corner points: two cells are adjacent exactly when they are siblings at
/// some branch followed by the same constant suffix over the remaining
/// third symbol.
AdjacencyPattern sierpinski_triangle();

/// Eight parts on the 3x3 grid with the center removed (row-major from the
/// bottom row); base adjacency is the ring, merge rules follow the
/// thirds-grid geometry.
AdjacencyPattern sierpinski_carpet();

/// Attaches a border gluing to a pattern. Moebius and Klein require the
/// 2-dimensional grid pattern; sphere and torus any euclid(n).
AdjacencyPattern glue(const AdjacencyPattern& base, BorderGluing gluing);

/// Dimension n when the pattern is structurally euclid(n), else nullopt.
std::optional<int> euclid_dimension(const AdjacencyPattern& pattern);

/// Gluing identifications at one depth, as canonical index pairs.
std::vector<std::pair<std::uint64_t, std::uint64_t>> gluing_edges(const AdjacencyPattern& pattern,
                                                                  int depth);

/// Named built-ins: euclid1..euclid4, sierpinski_triangle, sierpinski_carpet
/// and the glued variants circle, sphere2, torus2, moebius, klein.
std::optional<AdjacencyPattern> builtin_pattern(const std::string& name);
std::vector<std::string> builtin_pattern_names();

} // namespace continuum
