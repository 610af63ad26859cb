#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "continuum/level_graph.hpp"
#include "continuum/pattern.hpp"

namespace continuum {

/// Classifies cells of a pattern with dimension n into border ranks:
/// rank j (j < n) when the cell's symbols fit inside some connected set of
/// j+1 base-graph vertices (0 = corner, 1 = edge, 2 = wall, ...), and
/// interior otherwise. Independent of any gluing.
class BorderClassifier {
public:
    BorderClassifier(const DPattern& d, int dimension);

    /// Minimal applicable rank, or nullopt for interior cells.
    std::optional<int> rank(const Cell& c) const;
    bool is_border(const Cell& c) const { return rank(c).has_value(); }
    int dimension() const { return dimension_; }

private:
    int dimension_;
    std::size_t alphabet_size_;
    // connected_masks_[j]: bitmasks of all connected vertex sets of size j+1
    std::vector<std::vector<std::uint32_t>> connected_masks_;
};

struct PropertyReport {
    std::string property;
    bool pass = false;
    std::vector<std::string> witnesses; // offending cells or symbols
    std::string detail;
};

/// Border rank of a cell. Requires the pattern to have a defined dimension
/// (throws UnsupportedPatternError otherwise) and a nonempty cell.
std::optional<int> border_rank(const AdjacencyPattern& pattern, const Cell& c);

/// True iff border_rank is present.
bool is_border(const AdjacencyPattern& pattern, const Cell& c);

/// Indiscernibility of the parts: the automorphism group of the base graph
/// (found by brute force over symbol permutations) acts transitively on the
/// symbols. Witnesses on failure are two symbols in different orbits.
PropertyReport check_indiscernibility(const AdjacencyPattern& pattern);

/// Homogeneity of the parts: at every depth 2..max_depth all non-border
/// cells have isomorphic rooted balls of the given radius, where each ball
/// vertex carries its degree in the bordered graph (cells plus the border
/// element attached to every border cell). Witnesses on failure are two
/// cells whose neighborhoods differ.
PropertyReport check_homogeneity(const AdjacencyPattern& pattern, int max_depth, int radius = 1);

/// The common base-graph degree, defined when indiscernibility and
/// homogeneity both hold; nullopt otherwise. Homogeneity is probed to the
/// deepest level with at most 1024 cells (at least 2).
std::optional<int> dimension(const AdjacencyPattern& pattern);

/// Fills the graph's border flags from the pattern's border classification.
void annotate_borders(LevelGraph& graph, const AdjacencyPattern& pattern);

/// Census of border ranks at one depth: counts[j] = number of rank-j cells,
/// interior = the rest.
struct BorderCensus {
    std::vector<std::uint64_t> rank_counts;
    std::uint64_t border_total = 0;
    std::uint64_t interior = 0;
};

BorderCensus border_census(const AdjacencyPattern& pattern, int depth);

} // namespace continuum
