#include <doctest.h>

#include <set>

#include "continuum/builtin.hpp"
#include "continuum/error.hpp"
#include "continuum/level_graph.hpp"
#include "support/oracles.hpp"

using namespace continuum;

namespace {

std::set<std::pair<std::string, std::string>> edge_words(const LevelGraph& g,
                                                         const AdjacencyPattern& p) {
    std::set<std::pair<std::string, std::string>> out;
    for (const Edge& e : g.edges())
        out.insert({format_cell(g.cell(e.u), p.alphabet()),
                    format_cell(g.cell(e.v), p.alphabet())});
    return out;
}

} // namespace

TEST_CASE("interval pattern: levels two and three") {
    const auto p = euclid(1);
    CHECK(edge_words(level_graph(p, 2), p) ==
          std::set<std::pair<std::string, std::string>>{
              {"a.a", "a.b"}, {"a.b", "b.a"}, {"b.a", "b.b"}});
    const auto g3 = level_graph(p, 3);
    CHECK(g3.has_edge(g3.index(parse_cell("a.b.b", p.alphabet())),
                      g3.index(parse_cell("b.a.a", p.alphabet()))));
}

TEST_CASE("interval pattern equals the dyadic oracle up to depth 10") {
    const auto p = euclid(1);
    const auto levels = level_graphs(p, 10);
    for (const LevelGraph& g : levels) {
        CHECK(oracles::graph_edges(g) == oracles::interval_edges(g.depth()));
        // Path graph: 2^k nodes, 2^k - 1 edges, constant words as endpoints.
        CHECK(g.node_count() == (std::uint64_t{1} << g.depth()));
        CHECK(g.edges().size() == g.node_count() - 1);
        auto adj = g.adjacency_lists();
        CHECK(adj[0].size() == 1);                     // a.a...a
        CHECK(adj[g.node_count() - 1].size() == 1);    // b.b...b
    }
}

TEST_CASE("grid pattern equals the dyadic grid oracle up to depth 5") {
    const auto p = euclid(2);
    const auto levels = level_graphs(p, 5);
    for (const LevelGraph& g : levels) {
        CHECK(oracles::graph_edges(g) == oracles::grid2_edges(g.depth()));
        const std::uint64_t side = std::uint64_t{1} << g.depth();
        CHECK(g.edges().size() == 2 * side * (side - 1));
    }
}

TEST_CASE("grid level 2 contains the stated cross-parent pair") {
    const auto p = euclid(2);
    const auto g = level_graph(p, 2);
    CHECK(g.has_edge(g.index(parse_cell("a.d", p.alphabet())),
                     g.index(parse_cell("b.c", p.alphabet()))));
}

TEST_CASE("adjacent_same_length") {
    const auto p2 = euclid(2);
    const auto ab = p2.alphabet();
    CHECK(adjacent_same_length(p2, parse_cell("c.b.d", ab), parse_cell("d.a.c", ab)));
    const auto p1 = euclid(1);
    CHECK_FALSE(adjacent_same_length(p1, parse_cell("a.a", p1.alphabet()),
                                     parse_cell("b.b", p1.alphabet())));
    CHECK_FALSE(adjacent_same_length(p1, parse_cell("a.b", p1.alphabet()),
                                     parse_cell("a.b", p1.alphabet())));
    CHECK_THROWS_AS(adjacent_same_length(p1, parse_cell("a", p1.alphabet()),
                                         parse_cell("a.b", p1.alphabet())),
                    InputError);
}

TEST_CASE("adjacent_general across lengths") {
    const auto p1 = euclid(1);
    const auto ab1 = p1.alphabet();
    CHECK(adjacent_general(p1, parse_cell("a", ab1), parse_cell("b.a", ab1)));
    CHECK_FALSE(adjacent_general(p1, parse_cell("a", ab1), parse_cell("a.b", ab1)));
    const auto p2 = euclid(2);
    const auto ab2 = p2.alphabet();
    CHECK_FALSE(adjacent_general(p2, parse_cell("a", ab2), parse_cell("d.a", ab2)));
    CHECK(adjacent_general(p2, parse_cell("a", ab2), parse_cell("b.c", ab2)));
}

TEST_CASE("adjacent_general agrees with descendant enumeration at depth <= 4") {
    const auto p = euclid(1);
    const std::size_t l = 2;
    for (int dx = 1; dx <= 3; ++dx)
        for (int dy = dx; dy <= 4; ++dy) {
            const auto g = level_graph(p, dy);
            for (std::uint64_t i = 0; i < cell_count(l, dx); ++i)
                for (std::uint64_t j = 0; j < cell_count(l, dy); ++j) {
                    const Cell x = index_cell(i, l, dx);
                    const Cell y = index_cell(j, l, dy);
                    if (prefix_relation(x, y) != PrefixRelation::Incomparable)
                        continue;
                    bool brute = false;
                    const std::uint64_t extensions = cell_count(l, dy - dx);
                    for (std::uint64_t e = 0; e < extensions && !brute; ++e)
                        brute = g.has_edge(i * extensions + e, j);
                    CHECK(adjacent_general(p, x, y) == brute);
                    CHECK(adjacent_general(p, y, x) == brute);
                }
        }
}

TEST_CASE("refinement holds for the grid patterns") {
    CHECK(check_refinement(euclid(1), 6).pass);
    CHECK(check_refinement(euclid(2), 5).pass);
}

TEST_CASE("a deleted merge rule is reported as an orphaned edge") {
    const auto p = euclid(1);
    MRuleMap rules = p.m_rules();
    rules.erase({1, 0}); // the cross-parent rule
    const AdjacencyPattern broken("euclid1_broken", p.d(), rules);

    const auto report = check_refinement(broken, 3);
    CHECK_FALSE(report.pass);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].depth == 2);
    CHECK(format_cell(report.violations[0].left, p.alphabet()) == "a.b");
    CHECK(format_cell(report.violations[0].right, p.alphabet()) == "b.a");

    // The strict builder refuses outright, naming the same edge.
    CHECK_THROWS_AS(level_graph(broken, 3), RefinementError);
    try {
        level_graph(broken, 3);
    } catch (const RefinementError& e) {
        CHECK(e.left() == "a.b");
        CHECK(e.right() == "b.a");
        CHECK(e.depth() == 2);
    }
}

TEST_CASE("connectivity of the grid patterns") {
    const auto report = connectivity(euclid(2), 5);
    CHECK(report.pass);
    CHECK(report.levels.size() == 5);
    for (const auto& level : report.levels)
        CHECK(level.components == 1);
}

TEST_CASE("a disconnected base graph is rejected at construction") {
    CHECK_THROWS_AS(DPattern(Alphabet({"a", "b", "c", "d"}), {{0, 1}, {2, 3}}), InputError);
}

TEST_CASE("generation is deterministic") {
    const auto p = euclid(2);
    const auto a = level_graph(p, 4);
    const auto b = level_graph(p, 4);
    REQUIRE(a.edges().size() == b.edges().size());
    for (std::size_t i = 0; i < a.edges().size(); ++i) {
        CHECK(a.edges()[i].u == b.edges()[i].u);
        CHECK(a.edges()[i].v == b.edges()[i].v);
        CHECK(a.edges()[i].origin == b.edges()[i].origin);
    }
}

TEST_CASE("edges carry their origin") {
    const auto p = builtin_pattern("circle").value();
    const auto g = level_graph(p, 3);
    int base = 0, rule = 0, gluing = 0;
    for (const Edge& e : g.edges()) {
        if (e.origin == EdgeOrigin::BaseLift)
            ++base;
        else if (e.origin == EdgeOrigin::Rule)
            ++rule;
        else
            ++gluing;
    }
    CHECK(base == 4);   // sibling lift under each depth-2 parent
    CHECK(rule == 3);   // refined from the three non-gluing depth-2 edges
    CHECK(gluing == 1); // the endpoint identification
}
