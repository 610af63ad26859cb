#include "continuum/analysis.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "continuum/error.hpp"

namespace continuum {

namespace {

// ---------------------------------------------------------------------
// Automorphisms of the base graph, by backtracking over symbol images.
// ---------------------------------------------------------------------

struct AutSearch {
    std::size_t l;
    std::vector<std::vector<char>> adj;
    std::vector<int> image;
    std::vector<char> used;
    std::size_t count = 0;
    std::set<int> orbit_of_first;

    explicit AutSearch(const DPattern& d) : l(d.size()) {
        adj.assign(l, std::vector<char>(l, 0));
        for (const auto& [s, t] : d.adjacency())
            adj[s][t] = adj[t][s] = 1;
        image.assign(l, -1);
        used.assign(l, 0);
    }

    void run(std::size_t pos) {
        if (pos == l) {
            ++count;
            orbit_of_first.insert(image[0]);
            return;
        }
        for (std::size_t v = 0; v < l; ++v) {
            if (used[v])
                continue;
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q)
                if (adj[pos][q] != adj[v][static_cast<std::size_t>(image[q])])
                    ok = false;
            if (!ok)
                continue;
            image[pos] = static_cast<int>(v);
            used[v] = 1;
            run(pos + 1);
            used[v] = 0;
            image[pos] = -1;
        }
    }
};

// ---------------------------------------------------------------------
// Rooted labeled-ball isomorphism for the homogeneity check.
// ---------------------------------------------------------------------

// Ball around a root: vertex 0 is the root; labels are degrees in the
// bordered graph; edges are the induced cell edges.
struct Ball {
    std::vector<int> labels;
    std::vector<std::vector<char>> adj;

    std::vector<int> sorted_labels() const {
        auto s = labels;
        std::sort(s.begin(), s.end());
        return s;
    }
    std::size_t edge_count() const {
        std::size_t e = 0;
        for (std::size_t i = 0; i < adj.size(); ++i)
            for (std::size_t j = i + 1; j < adj.size(); ++j)
                e += adj[i][j] ? 1 : 0;
        return e;
    }
};

bool ball_isomorphic_rec(const Ball& a, const Ball& b, std::vector<int>& image,
                         std::vector<char>& used, std::size_t pos) {
    if (pos == a.labels.size())
        return true;
    for (std::size_t v = pos == 0 ? 0 : 1; v < b.labels.size(); ++v) {
        if (pos == 0 && v != 0)
            break; // the root maps to the root
        if (used[v] || a.labels[pos] != b.labels[v])
            continue;
        bool ok = true;
        for (std::size_t q = 0; q < pos && ok; ++q)
            if (a.adj[pos][q] != b.adj[v][static_cast<std::size_t>(image[q])])
                ok = false;
        if (!ok)
            continue;
        image[pos] = static_cast<int>(v);
        used[v] = 1;
        if (ball_isomorphic_rec(a, b, image, used, pos + 1))
            return true;
        used[v] = 0;
        image[pos] = -1;
    }
    return false;
}

bool ball_isomorphic(const Ball& a, const Ball& b) {
    if (a.labels.size() != b.labels.size())
        return false;
    if (a.sorted_labels() != b.sorted_labels())
        return false;
    if (a.edge_count() != b.edge_count())
        return false;
    std::vector<int> image(a.labels.size(), -1);
    std::vector<char> used(b.labels.size(), 0);
    return ball_isomorphic_rec(a, b, image, used, 0);
}

Ball extract_ball(std::uint64_t root, int radius,
                  const std::vector<std::vector<std::uint64_t>>& adj,
                  const std::vector<int>& bordered_degree) {
    std::vector<std::uint64_t> vertices{root};
    std::map<std::uint64_t, int> dist{{root, 0}};
    std::queue<std::uint64_t> queue;
    queue.push(root);
    while (!queue.empty()) {
        std::uint64_t v = queue.front();
        queue.pop();
        if (dist[v] == radius)
            continue;
        for (std::uint64_t w : adj[v])
            if (!dist.contains(w)) {
                dist[w] = dist[v] + 1;
                vertices.push_back(w);
                queue.push(w);
            }
    }
    // Root stays first; the rest in index order for determinism.
    std::sort(vertices.begin() + 1, vertices.end());
    std::map<std::uint64_t, std::size_t> pos;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        pos[vertices[i]] = i;

    Ball ball;
    ball.labels.resize(vertices.size());
    ball.adj.assign(vertices.size(), std::vector<char>(vertices.size(), 0));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        ball.labels[i] = bordered_degree[vertices[i]];
        for (std::uint64_t w : adj[vertices[i]]) {
            auto it = pos.find(w);
            if (it != pos.end())
                ball.adj[i][it->second] = 1;
        }
    }
    return ball;
}

int probe_depth_for_dimension(std::size_t alphabet_size) {
    int k = 1;
    std::uint64_t cells = alphabet_size;
    while (cells * alphabet_size <= 1024) {
        cells *= alphabet_size;
        ++k;
    }
    return std::max(k, 2);
}

} // namespace

BorderClassifier::BorderClassifier(const DPattern& d, int dimension)
    : dimension_(dimension), alphabet_size_(d.size()) {
    if (alphabet_size_ > 64)
        throw UnsupportedPatternError("border classification supports at most 64 symbols");
    if (dimension < 1)
        throw UnsupportedPatternError("border classification needs dimension >= 1");

    // Grow connected vertex sets of size 1..dimension.
    std::set<std::uint64_t> current;
    for (std::size_t v = 0; v < alphabet_size_; ++v)
        current.insert(std::uint64_t{1} << v);
    connected_masks_.push_back({current.begin(), current.end()});
    for (int size = 2; size <= dimension; ++size) {
        std::set<std::uint64_t> next;
        for (std::uint64_t mask : current)
            for (const auto& [s, t] : d.adjacency()) {
                const std::uint64_t ms = std::uint64_t{1} << s;
                const std::uint64_t mt = std::uint64_t{1} << t;
                if ((mask & ms) && !(mask & mt))
                    next.insert(mask | mt);
                if ((mask & mt) && !(mask & ms))
                    next.insert(mask | ms);
            }
        current = next;
        connected_masks_.push_back({current.begin(), current.end()});
    }
}

std::optional<int> BorderClassifier::rank(const Cell& c) const {
    if (c.is_unit())
        throw InputError("border rank is defined for nonempty cells");
    std::uint64_t cell_mask = 0;
    for (SymbolId s : c.word()) {
        if (s >= alphabet_size_)
            throw InputError("cell contains a symbol outside the alphabet");
        cell_mask |= std::uint64_t{1} << s;
    }
    for (int j = 0; j < dimension_; ++j)
        for (std::uint64_t mask : connected_masks_[static_cast<std::size_t>(j)])
            if ((cell_mask & ~mask) == 0)
                return j;
    return std::nullopt;
}

std::optional<int> border_rank(const AdjacencyPattern& pattern, const Cell& c) {
    const auto n = dimension(pattern);
    if (!n)
        throw UnsupportedPatternError("pattern '" + pattern.name() +
                                      "' has no defined dimension; borders are undefined");
    return BorderClassifier(pattern.d(), *n).rank(c);
}

bool is_border(const AdjacencyPattern& pattern, const Cell& c) {
    return border_rank(pattern, c).has_value();
}

PropertyReport check_indiscernibility(const AdjacencyPattern& pattern) {
    PropertyReport report;
    report.property = "indiscernibility";
    AutSearch search(pattern.d());
    search.run(0);
    const std::size_t orbit = search.orbit_of_first.size();
    report.detail = std::to_string(search.count) + " automorphisms, orbit of " +
                    pattern.alphabet().name(0) + " has " + std::to_string(orbit) + " of " +
                    std::to_string(pattern.alphabet_size()) + " symbols";
    report.pass = orbit == pattern.alphabet_size();
    if (!report.pass) {
        for (std::size_t v = 0; v < pattern.alphabet_size(); ++v)
            if (!search.orbit_of_first.contains(static_cast<int>(v))) {
                report.witnesses.push_back(pattern.alphabet().name(0));
                report.witnesses.push_back(pattern.alphabet().name(static_cast<SymbolId>(v)));
                break;
            }
    }
    return report;
}

PropertyReport check_homogeneity(const AdjacencyPattern& pattern, int max_depth, int radius) {
    if (max_depth < 2)
        throw InputError("homogeneity check needs depth >= 2");
    if (radius < 1)
        throw InputError("homogeneity radius must be >= 1");

    PropertyReport report;
    report.property = "homogeneity";
    report.pass = true;

    // Border cells are excluded from the comparison when the base graph is
    // regular (the candidate dimension is its degree); otherwise there is
    // no border notion and every cell is compared.
    std::optional<BorderClassifier> classifier;
    if (pattern.d().regular())
        classifier.emplace(pattern.d(), pattern.d().degree(0));

    const auto levels = level_graphs(pattern, max_depth);
    for (const LevelGraph& g : levels) {
        if (g.depth() < 2)
            continue;
        const auto adj = g.adjacency_lists();
        const std::uint64_t n = g.node_count();

        std::vector<char> border(n, 0);
        if (classifier)
            for (std::uint64_t i = 0; i < n; ++i)
                border[i] = classifier->is_border(g.cell(i)) ? 1 : 0;

        // Degree in the bordered graph: the border element contributes one
        // extra edge to every border cell.
        std::vector<int> bordered_degree(n);
        for (std::uint64_t i = 0; i < n; ++i)
            bordered_degree[i] = static_cast<int>(adj[i].size()) + (border[i] ? 1 : 0);

        std::optional<Ball> reference;
        std::uint64_t reference_root = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (border[i])
                continue;
            Ball ball = extract_ball(i, radius, adj, bordered_degree);
            if (!reference) {
                reference = std::move(ball);
                reference_root = i;
                continue;
            }
            if (!ball_isomorphic(*reference, ball)) {
                report.pass = false;
                report.witnesses.push_back(format_cell(g.cell(reference_root), pattern.alphabet()));
                report.witnesses.push_back(format_cell(g.cell(i), pattern.alphabet()));
                report.detail = "neighborhoods differ at depth " + std::to_string(g.depth());
                return report;
            }
        }
    }
    report.detail = "all non-border neighborhoods isomorphic up to depth " +
                    std::to_string(max_depth);
    return report;
}

std::optional<int> dimension(const AdjacencyPattern& pattern) {
    if (!pattern.d().regular())
        return std::nullopt;
    if (!check_indiscernibility(pattern).pass)
        return std::nullopt;
    const int probe = probe_depth_for_dimension(pattern.alphabet_size());
    if (!check_homogeneity(pattern, probe).pass)
        return std::nullopt;
    return pattern.d().degree(0);
}

void annotate_borders(LevelGraph& graph, const AdjacencyPattern& pattern) {
    const auto n = dimension(pattern);
    if (!n)
        throw UnsupportedPatternError("pattern '" + pattern.name() +
                                      "' has no defined dimension; borders are undefined");
    const BorderClassifier classifier(pattern.d(), *n);
    std::vector<bool> flags(graph.node_count());
    for (std::uint64_t i = 0; i < graph.node_count(); ++i)
        flags[i] = classifier.is_border(graph.cell(i));
    graph.set_border_flags(std::move(flags));
}

BorderCensus border_census(const AdjacencyPattern& pattern, int depth) {
    const auto n = dimension(pattern);
    if (!n)
        throw UnsupportedPatternError("pattern '" + pattern.name() +
                                      "' has no defined dimension; borders are undefined");
    const BorderClassifier classifier(pattern.d(), *n);
    BorderCensus census;
    census.rank_counts.assign(static_cast<std::size_t>(*n), 0);
    const std::uint64_t count = cell_count(pattern.alphabet_size(), depth);
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto rank = classifier.rank(index_cell(i, pattern.alphabet_size(), depth));
        if (rank) {
            ++census.rank_counts[static_cast<std::size_t>(*rank)];
            ++census.border_total;
        } else {
            ++census.interior;
        }
    }
    return census;
}

} // namespace continuum
