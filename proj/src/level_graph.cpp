#include "continuum/level_graph.hpp"

#include <algorithm>
#include <queue>

#include "continuum/builtin.hpp"
#include "continuum/error.hpp"

namespace continuum {

namespace {

constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 24;

bool edge_less(const Edge& a, const Edge& b) {
    if (a.u != b.u)
        return a.u < b.u;
    if (a.v != b.v)
        return a.v < b.v;
    return static_cast<int>(a.origin) < static_cast<int>(b.origin);
}

std::vector<Edge> canonicalize(std::vector<Edge> edges) {
    for (auto& e : edges)
        if (e.u > e.v)
            std::swap(e.u, e.v);
    std::sort(edges.begin(), edges.end(), edge_less);
    // Duplicates keep the earliest origin (BaseLift < Rule < Gluing).
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

// One construction for both the strict builder (missing rule -> error) and
// the refinement checker (missing rule -> no children).
std::vector<LevelGraph> build_levels(const AdjacencyPattern& p, int depth, bool strict) {
    if (depth < 1)
        throw InputError("depth must be at least 1");
    const std::size_t l = p.alphabet_size();
    if (cell_count(l, depth) > kMaxNodes)
        throw InputError("level graph at depth " + std::to_string(depth) +
                         " exceeds the supported size");

    std::vector<LevelGraph> levels;
    levels.reserve(static_cast<std::size_t>(depth));

    std::vector<Edge> edges;
    for (const auto& [s, t] : p.d().adjacency())
        edges.push_back({s, t, EdgeOrigin::BaseLift});
    for (const auto& [u, v] : gluing_edges(p, 1))
        edges.push_back({u, v, EdgeOrigin::Gluing});
    levels.emplace_back(1, l, canonicalize(std::move(edges)));

    // Sibling pairs at depth >= 2: base adjacency plus declared extras.
    std::vector<SymbolPair> sibling = p.d().adjacency();
    sibling.insert(sibling.end(), p.sibling_extras().begin(), p.sibling_extras().end());
    std::sort(sibling.begin(), sibling.end());
    sibling.erase(std::unique(sibling.begin(), sibling.end()), sibling.end());

    for (int k = 1; k < depth; ++k) {
        const LevelGraph& prev = levels.back();
        std::vector<Edge> next;
        const std::uint64_t parents = prev.node_count();
        for (std::uint64_t x = 0; x < parents; ++x)
            for (const auto& [s, t] : sibling)
                next.push_back({x * l + s, x * l + t, EdgeOrigin::BaseLift});
        for (const Edge& e : prev.edges()) {
            if (e.origin == EdgeOrigin::Gluing)
                continue; // gluing edges are re-derived per level, not refined
            const SymbolId s = static_cast<SymbolId>(e.u % l);
            const SymbolId t = static_cast<SymbolId>(e.v % l);
            const auto* children = p.rule(s, t);
            if (!children) {
                if (strict) {
                    const auto& ab = p.alphabet();
                    throw RefinementError(k, format_cell(prev.cell(e.u), ab),
                                          format_cell(prev.cell(e.v), ab));
                }
                continue;
            }
            for (const auto& [cu, cv] : *children)
                next.push_back({e.u * l + cu, e.v * l + cv, EdgeOrigin::Rule});
        }
        for (const auto& [u, v] : gluing_edges(p, k + 1))
            next.push_back({u, v, EdgeOrigin::Gluing});
        levels.emplace_back(k + 1, l, canonicalize(std::move(next)));
    }
    return levels;
}

std::uint64_t component_count(const LevelGraph& g) {
    const std::uint64_t n = g.node_count();
    auto adj = g.adjacency_lists();
    std::vector<char> seen(n, 0);
    std::uint64_t components = 0;
    for (std::uint64_t start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        ++components;
        std::queue<std::uint64_t> queue;
        queue.push(start);
        seen[start] = 1;
        while (!queue.empty()) {
            std::uint64_t v = queue.front();
            queue.pop();
            for (std::uint64_t w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push(w);
                }
        }
    }
    return components;
}

} // namespace

const char* edge_origin_name(EdgeOrigin origin) {
    switch (origin) {
    case EdgeOrigin::BaseLift: return "base";
    case EdgeOrigin::Rule: return "rule";
    case EdgeOrigin::Gluing: return "gluing";
    }
    return "base";
}

LevelGraph::LevelGraph(int depth, std::size_t alphabet_size, std::vector<Edge> edges)
    : depth_(depth), alphabet_size_(alphabet_size),
      node_count_(cell_count(alphabet_size, depth)), edges_(std::move(edges)) {}

bool LevelGraph::has_edge(std::uint64_t u, std::uint64_t v) const {
    if (u > v)
        std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), u,
                               [](const Edge& e, std::uint64_t key) { return e.u < key; });
    for (; it != edges_.end() && it->u == u; ++it)
        if (it->v == v)
            return true;
    return false;
}

std::vector<std::vector<std::uint64_t>> LevelGraph::adjacency_lists() const {
    std::vector<std::vector<std::uint64_t>> adj(node_count_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

void LevelGraph::set_border_flags(std::vector<bool> flags) {
    if (flags.size() != node_count_)
        throw InputError("border flag vector size mismatch");
    border_flags_ = std::move(flags);
}

LevelGraph level_graph(const AdjacencyPattern& pattern, int depth) {
    return std::move(build_levels(pattern, depth, /*strict=*/true).back());
}

std::vector<LevelGraph> level_graphs(const AdjacencyPattern& pattern, int depth) {
    return build_levels(pattern, depth, /*strict=*/true);
}

bool adjacent_same_length(const AdjacencyPattern& pattern, const Cell& x, const Cell& y) {
    if (x.depth() != y.depth())
        throw InputError("adjacent_same_length requires cells of equal depth");
    if (x == y)
        return false;
    const LevelGraph g = level_graph(pattern, x.depth());
    return g.has_edge(g.index(x), g.index(y));
}

bool adjacent_general(const AdjacencyPattern& pattern, const Cell& x, const Cell& y) {
    switch (prefix_relation(x, y)) {
    case PrefixRelation::Equal:
    case PrefixRelation::Ancestor:    // a cell is not adjacent to its own part
    case PrefixRelation::Descendant:
        return false;
    case PrefixRelation::Incomparable:
        break;
    }
    if (x.depth() == y.depth())
        return adjacent_same_length(pattern, x, y);
    const Cell& shorter = x.depth() < y.depth() ? x : y;
    const Cell& longer = x.depth() < y.depth() ? y : x;
    const LevelGraph g = level_graph(pattern, longer.depth());
    const std::uint64_t target = g.index(longer);
    for (const Edge& e : g.edges()) {
        std::uint64_t other;
        if (e.u == target)
            other = e.v;
        else if (e.v == target)
            other = e.u;
        else
            continue;
        if (g.cell(other).prefix(shorter.depth()) == shorter)
            return true;
    }
    return false;
}

RefinementReport check_refinement(const AdjacencyPattern& pattern, int max_depth) {
    RefinementReport report;
    if (max_depth < 1)
        throw InputError("depth must be at least 1");
    const std::size_t l = pattern.alphabet_size();
    auto levels = build_levels(pattern, max_depth, /*strict=*/false);
    for (int k = 1; k < max_depth; ++k) {
        const LevelGraph& g = levels[static_cast<std::size_t>(k - 1)];
        const LevelGraph& next = levels[static_cast<std::size_t>(k)];
        for (const Edge& e : g.edges()) {
            bool refined = false;
            for (std::size_t u = 0; u < l && !refined; ++u)
                for (std::size_t v = 0; v < l && !refined; ++v)
                    if (next.has_edge(e.u * l + u, e.v * l + v))
                        refined = true;
            if (!refined) {
                report.pass = false;
                report.violations.push_back({k, g.cell(e.u), g.cell(e.v)});
            }
        }
    }
    return report;
}

ConnectivityReport connectivity(const AdjacencyPattern& pattern, int max_depth) {
    ConnectivityReport report;
    auto levels = level_graphs(pattern, max_depth);
    for (const LevelGraph& g : levels) {
        const std::uint64_t components = component_count(g);
        report.levels.push_back({g.depth(), components == 1, components});
        if (components != 1)
            report.pass = false;
    }
    return report;
}

} // namespace continuum
