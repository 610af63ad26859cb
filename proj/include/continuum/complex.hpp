#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "continuum/analysis.hpp"
#include "continuum/level_graph.hpp"
#include "continuum/pattern.hpp"

namespace continuum {

/// An element of the bordered cell collection at one depth: either a cell
/// or the distinguished border element.
class Site {
public:
    static Site border() { return Site{}; }
    static Site cell(Cell c) { return Site{std::move(c)}; }

    bool is_border() const { return !cell_.has_value(); }
    const Cell& as_cell() const { return *cell_; }

    bool operator==(const Site&) const = default;

private:
    Site() = default;
    explicit Site(Cell c) : cell_(std::move(c)) {}
    std::optional<Cell> cell_;
};

/// A total coloring of the depth-k cells of a pattern with a defined
/// dimension, together with the border element, which is always black.
/// Color 1 is white, color 2 is black; larger palettes are allowed.
class Complex {
public:
    static constexpr int kWhite = 1;
    static constexpr int kBlack = 2;

    /// `colors[i]` colors the cell with lexicographic rank i; values must
    /// lie in 1..palette. Validates that the pattern has a dimension.
    Complex(AdjacencyPattern pattern, int depth, std::vector<std::uint8_t> colors,
            int palette = 2);

    const AdjacencyPattern& pattern() const { return pattern_; }
    int depth() const { return depth_; }
    int palette() const { return palette_; }
    int pattern_dimension() const { return dimension_; }
    const std::vector<std::uint8_t>& colors() const { return colors_; }
    const LevelGraph& graph() const { return graph_; }

    int color_of_index(std::uint64_t i) const { return colors_[i]; }
    int color_of(const Site& s) const;
    bool cell_is_border(std::uint64_t i) const { return border_flags_[i] != 0; }

    std::uint64_t index(const Cell& c) const { return graph_.index(c); }
    Cell cell(std::uint64_t i) const { return graph_.cell(i); }
    std::uint64_t cell_node_count() const { return graph_.node_count(); }

private:
    AdjacencyPattern pattern_;
    int depth_;
    std::vector<std::uint8_t> colors_;
    int palette_;
    int dimension_;
    LevelGraph graph_;
    std::vector<std::uint8_t> border_flags_;
};

/// The bordered adjacency: cell pairs use the level graph, a cell touches
/// the border element iff it is a border cell, and the border element is
/// not adjacent to itself.
bool bordered_adjacent(const Complex& cx, const Site& a, const Site& b);

struct SegmentInfo {
    int id;    // >= 2; 1 is reserved for out-of-domain queries
    int color;
    std::uint64_t size; // member count, the border element included
    bool contains_border;
};

/// The quotient of the bordered cells by same-color connectivity. Ids start
/// at 2; the border element's segment always gets id 2, the remaining
/// components follow in order of their least cell.
class SegmentMap {
public:
    SegmentMap(std::vector<int> cell_segment, int border_segment,
               std::vector<SegmentInfo> segments, int depth);

    static constexpr int kReservedId = 1;

    /// (segment id, color) of a depth-k cell; (1, 0) when the queried depth
    /// does not match the complex or the site is otherwise out of domain.
    std::pair<int, int> at(int query_depth, const Site& site, const Complex& cx) const;

    int segment_of_index(std::uint64_t i) const { return cell_segment_[i]; }
    int border_segment() const { return border_segment_; }
    const std::vector<SegmentInfo>& segments() const { return segments_; }
    const SegmentInfo& info(int id) const;

private:
    std::vector<int> cell_segment_;
    int border_segment_;
    std::vector<SegmentInfo> segments_; // sorted by id
    int depth_;
};

/// Computes the segments of a complex (connected components of each
/// color-restricted bordered adjacency).
SegmentMap segments(const Complex& cx);

/// Segment id and color of a cell, with (1, 0) for out-of-domain queries.
std::pair<int, int> q_e(const Complex& cx, const SegmentMap& map, int depth, const Cell& c);

/// The segment adjacency graph: segments of different colors joined when
/// some bordered-adjacent pair of elements spans them. Rooted at the border
/// element's segment.
struct ShapeTree {
    std::vector<SegmentInfo> nodes;          // sorted by id
    std::vector<std::pair<int, int>> edges;  // segment id pairs, sorted
    int root;                                // border segment id
    bool is_tree;                            // connected and |E| = |V|-1
    bool bipartite_by_color;                 // every edge joins two colors
};

ShapeTree segment_adjacency(const Complex& cx);
ShapeTree segment_adjacency(const Complex& cx, const SegmentMap& map);

/// A witness sequence of same-colored, successively bordered-adjacent
/// elements from `from` to `to`, or nullopt when they lie in different
/// segments. Throws InputError when the endpoint colors differ.
std::optional<std::vector<Site>> path(const Complex& cx, const Site& from, const Site& to);

/// Uniformly seeded random coloring over the palette (for sampling checks).
Complex random_complex(const AdjacencyPattern& pattern, int depth, int palette,
                       std::uint64_t seed);

} // namespace continuum
