#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "continuum/cell.hpp"
#include "continuum/pattern.hpp"

namespace continuum {

/// How an edge entered the graph: lift of the base adjacency under a common
/// parent, application of a merge rule to a parent edge, or a border gluing.
enum class EdgeOrigin : std::uint8_t { BaseLift = 0, Rule = 1, Gluing = 2 };

const char* edge_origin_name(EdgeOrigin origin);

struct Edge {
    std::uint64_t u; // smaller cell index
    std::uint64_t v; // larger cell index
    EdgeOrigin origin;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v;
    }
};

/// The adjacency graph on all cells of one depth. Cells are identified by
/// their lexicographic rank (see cell_index); edges are stored with the
/// smaller index first, sorted.
class LevelGraph {
public:
    LevelGraph() = default;
    LevelGraph(int depth, std::size_t alphabet_size, std::vector<Edge> edges);

    int depth() const { return depth_; }
    std::size_t alphabet_size() const { return alphabet_size_; }
    std::uint64_t node_count() const { return node_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(std::uint64_t u, std::uint64_t v) const;
    Cell cell(std::uint64_t index) const { return index_cell(index, alphabet_size_, depth_); }
    std::uint64_t index(const Cell& c) const { return cell_index(c, alphabet_size_); }

    /// Neighbor lists for all nodes (amortizes repeated queries).
    std::vector<std::vector<std::uint64_t>> adjacency_lists() const;

    /// Per-cell border marker, filled by the structure analysis.
    const std::optional<std::vector<bool>>& border_flags() const { return border_flags_; }
    void set_border_flags(std::vector<bool> flags);

private:
    int depth_ = 0;
    std::size_t alphabet_size_ = 0;
    std::uint64_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::vector<bool>> border_flags_;
};

/// Builds the depth-k adjacency graph: the base adjacency at depth 1, then
/// per level the sibling lift, the merge rules applied to every non-gluing
/// edge of the previous level, and the gluing identifications. Throws
/// RefinementError when a non-gluing edge's top pair has no rule.
LevelGraph level_graph(const AdjacencyPattern& pattern, int depth);

/// All levels 1..depth from one pass.
std::vector<LevelGraph> level_graphs(const AdjacencyPattern& pattern, int depth);

/// True iff x and y (words of equal depth) are adjacent at their level.
bool adjacent_same_length(const AdjacencyPattern& pattern, const Cell& x, const Cell& y);

/// Cross-length adjacency: cells of different depth are adjacent when some
/// descendant of the shorter one at the longer one's depth is adjacent to
/// it. Cells related by prefix are never adjacent. Equal depths fall back
/// to adjacent_same_length.
bool adjacent_general(const AdjacencyPattern& pattern, const Cell& x, const Cell& y);

struct RefinementViolation {
    int depth;        // level of the orphaned edge
    Cell left, right; // the edge with no adjacent child pair
};

/// Result of checking that every edge has at least one adjacent child pair
/// one level down. Violations are data, not errors; missing rules are
/// treated as rules with no children.
struct RefinementReport {
    bool pass = true;
    std::vector<RefinementViolation> violations;
};

RefinementReport check_refinement(const AdjacencyPattern& pattern, int max_depth);

struct ConnectivityLevel {
    int depth;
    bool connected;
    std::uint64_t components;
};

struct ConnectivityReport {
    bool pass = true;
    std::vector<ConnectivityLevel> levels;
};

/// Checks that the level graph is connected at every depth 1..max_depth,
/// i.e. uniting all adjacent parts gives back the unit.
ConnectivityReport connectivity(const AdjacencyPattern& pattern, int max_depth);

} // namespace continuum
