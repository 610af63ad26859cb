#include "continuum/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "continuum/error.hpp"

namespace continuum {

namespace {

// Union-find over the cells plus one extra node for the border element.
struct DisjointSet {
    std::vector<std::uint64_t> parent;

    explicit DisjointSet(std::uint64_t n) : parent(n) {
        for (std::uint64_t i = 0; i < n; ++i)
            parent[i] = i;
    }
    std::uint64_t find(std::uint64_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void join(std::uint64_t a, std::uint64_t b) { parent[find(a)] = find(b); }
};

} // namespace

Complex::Complex(AdjacencyPattern pattern, int depth, std::vector<std::uint8_t> colors,
                 int palette)
    : pattern_(std::move(pattern)), depth_(depth), colors_(std::move(colors)),
      palette_(palette) {
    if (depth_ < 1)
        throw InputError("complex depth must be at least 1");
    if (palette_ < 2)
        throw InputError("palette must have at least the colors white and black");
    const auto dim = dimension(pattern_);
    if (!dim)
        throw UnsupportedPatternError("complexes need a pattern with a defined dimension");
    dimension_ = *dim;
    graph_ = level_graph(pattern_, depth_);
    if (colors_.size() != graph_.node_count())
        throw InputError("coloring must assign a color to every depth-" +
                         std::to_string(depth_) + " cell");
    for (std::uint8_t c : colors_)
        if (c < 1 || c > palette_)
            throw InputError("color " + std::to_string(c) + " outside the palette");

    const BorderClassifier classifier(pattern_.d(), dimension_);
    border_flags_.resize(graph_.node_count());
    for (std::uint64_t i = 0; i < graph_.node_count(); ++i)
        border_flags_[i] = classifier.is_border(graph_.cell(i)) ? 1 : 0;
}

int Complex::color_of(const Site& s) const {
    if (s.is_border())
        return kBlack;
    const Cell& c = s.as_cell();
    if (c.depth() != depth_)
        throw InputError("site depth does not match the complex");
    return colors_[index(c)];
}

bool bordered_adjacent(const Complex& cx, const Site& a, const Site& b) {
    if (a.is_border() && b.is_border())
        return false;
    if (a.is_border() || b.is_border()) {
        const Cell& c = a.is_border() ? b.as_cell() : a.as_cell();
        if (c.depth() != cx.depth())
            throw InputError("site depth does not match the complex");
        return cx.cell_is_border(cx.index(c));
    }
    const Cell& x = a.as_cell();
    const Cell& y = b.as_cell();
    if (x.depth() != cx.depth() || y.depth() != cx.depth())
        throw InputError("site depth does not match the complex");
    if (x == y)
        return false;
    return cx.graph().has_edge(cx.index(x), cx.index(y));
}

SegmentMap::SegmentMap(std::vector<int> cell_segment, int border_segment,
                       std::vector<SegmentInfo> segments, int depth)
    : cell_segment_(std::move(cell_segment)), border_segment_(border_segment),
      segments_(std::move(segments)), depth_(depth) {}

const SegmentInfo& SegmentMap::info(int id) const {
    for (const auto& s : segments_)
        if (s.id == id)
            return s;
    throw InputError("unknown segment id " + std::to_string(id));
}

std::pair<int, int> SegmentMap::at(int query_depth, const Site& site, const Complex& cx) const {
    if (query_depth != depth_)
        return {kReservedId, 0};
    if (site.is_border())
        return {border_segment_, Complex::kBlack};
    const Cell& c = site.as_cell();
    if (c.depth() != depth_)
        return {kReservedId, 0};
    for (SymbolId s : c.word())
        if (!cx.pattern().alphabet().contains(s))
            return {kReservedId, 0};
    const int id = cell_segment_[cx.index(c)];
    return {id, cx.color_of_index(cx.index(c))};
}

SegmentMap segments(const Complex& cx) {
    const std::uint64_t n = cx.cell_node_count();
    const std::uint64_t border_node = n;
    DisjointSet sets(n + 1);

    for (const Edge& e : cx.graph().edges())
        if (cx.color_of_index(e.u) == cx.color_of_index(e.v))
            sets.join(e.u, e.v);
    for (std::uint64_t i = 0; i < n; ++i)
        if (cx.cell_is_border(i) && cx.color_of_index(i) == Complex::kBlack)
            sets.join(i, border_node);

    // Deterministic ids: the border element's component first, then the
    // others ordered by their least cell.
    std::map<std::uint64_t, std::uint64_t> least_member; // root -> least node
    for (std::uint64_t i = 0; i <= n; ++i) {
        const std::uint64_t root = sets.find(i);
        auto it = least_member.find(root);
        if (it == least_member.end())
            least_member[root] = i;
    }
    const std::uint64_t border_root = sets.find(border_node);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> order; // (sort key, root)
    for (const auto& [root, least] : least_member)
        order.push_back({root == border_root ? 0 : least + 1, root});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::map<std::uint64_t, int> id_of_root;
    std::vector<SegmentInfo> infos;
    int next_id = 2;
    for (const auto& [key, root] : order) {
        (void)key;
        id_of_root[root] = next_id;
        infos.push_back({next_id, 0, 0, root == border_root});
        ++next_id;
    }

    std::vector<int> cell_segment(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const int id = id_of_root[sets.find(i)];
        cell_segment[i] = id;
        auto& info = infos[static_cast<std::size_t>(id - 2)];
        info.color = cx.color_of_index(i);
        ++info.size;
    }
    auto& border_info = infos[static_cast<std::size_t>(id_of_root[border_root] - 2)];
    border_info.color = Complex::kBlack;
    ++border_info.size; // the border element itself

    return SegmentMap(std::move(cell_segment), id_of_root[border_root], std::move(infos),
                      cx.depth());
}

std::pair<int, int> q_e(const Complex& cx, const SegmentMap& map, int depth, const Cell& c) {
    return map.at(depth, Site::cell(c), cx);
}

ShapeTree segment_adjacency(const Complex& cx) { return segment_adjacency(cx, segments(cx)); }

ShapeTree segment_adjacency(const Complex& cx, const SegmentMap& map) {
    ShapeTree tree;
    tree.nodes = map.segments();
    tree.root = map.border_segment();

    std::set<std::pair<int, int>> edges;
    auto connect = [&edges](int a, int b) {
        if (a == b)
            return;
        edges.insert({std::min(a, b), std::max(a, b)});
    };
    for (const Edge& e : cx.graph().edges())
        if (cx.color_of_index(e.u) != cx.color_of_index(e.v))
            connect(map.segment_of_index(e.u), map.segment_of_index(e.v));
    for (std::uint64_t i = 0; i < cx.cell_node_count(); ++i)
        if (cx.cell_is_border(i) && cx.color_of_index(i) != Complex::kBlack)
            connect(map.segment_of_index(i), map.border_segment());
    tree.edges.assign(edges.begin(), edges.end());

    tree.bipartite_by_color = true;
    for (const auto& [a, b] : tree.edges)
        if (map.info(a).color == map.info(b).color)
            tree.bipartite_by_color = false;

    // Tree check: connected from the root and |E| = |V| - 1.
    std::map<int, std::vector<int>> adj;
    for (const auto& [a, b] : tree.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<int> seen{tree.root};
    std::queue<int> queue;
    queue.push(tree.root);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : adj[v])
            if (seen.insert(w).second)
                queue.push(w);
    }
    tree.is_tree = seen.size() == tree.nodes.size() &&
                   tree.edges.size() + 1 == tree.nodes.size();
    return tree;
}

std::optional<std::vector<Site>> path(const Complex& cx, const Site& from, const Site& to) {
    const int color = cx.color_of(from);
    if (cx.color_of(to) != color)
        throw InputError("path endpoints must have the same color");

    const std::uint64_t n = cx.cell_node_count();
    const std::uint64_t border_node = n;
    auto node_of = [&](const Site& s) { return s.is_border() ? border_node : cx.index(s.as_cell()); };
    auto site_of = [&](std::uint64_t v) {
        return v == border_node ? Site::border() : Site::cell(cx.cell(v));
    };

    const std::uint64_t start = node_of(from);
    const std::uint64_t goal = node_of(to);
    if (start == goal)
        return std::vector<Site>{from};

    const auto adj = cx.graph().adjacency_lists();
    std::vector<std::int64_t> prev(n + 1, -2); // -2 unseen, -1 start marker
    prev[start] = -1;
    std::queue<std::uint64_t> queue;
    queue.push(start);
    auto visit = [&](std::uint64_t nb, std::uint64_t v) {
        if (prev[nb] != -2)
            return;
        const int nb_color = nb == border_node ? Complex::kBlack
                                               : cx.color_of_index(nb);
        if (nb_color != color)
            return;
        prev[nb] = static_cast<std::int64_t>(v);
        queue.push(nb);
    };
    while (!queue.empty()) {
        const std::uint64_t v = queue.front();
        queue.pop();
        if (v == goal)
            break;
        if (v == border_node) {
            for (std::uint64_t i = 0; i < n; ++i)
                if (cx.cell_is_border(i))
                    visit(i, v);
        } else {
            for (std::uint64_t w : adj[v])
                visit(w, v);
            if (cx.cell_is_border(v))
                visit(border_node, v);
        }
    }
    if (prev[goal] == -2)
        return std::nullopt;
    std::vector<Site> out;
    for (std::int64_t v = static_cast<std::int64_t>(goal); v != -1;
         v = prev[static_cast<std::uint64_t>(v)])
        out.push_back(site_of(static_cast<std::uint64_t>(v)));
    std::reverse(out.begin(), out.end());
    return out;
}

Complex random_complex(const AdjacencyPattern& pattern, int depth, int palette,
                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint64_t n = cell_count(pattern.alphabet_size(), depth);
    std::vector<std::uint8_t> colors(n);
    for (auto& c : colors)
        c = static_cast<std::uint8_t>(1 + rng() % static_cast<std::uint64_t>(palette));
    return Complex(pattern, depth, std::move(colors), palette);
}

} // namespace continuum
