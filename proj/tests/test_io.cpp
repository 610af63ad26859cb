#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "continuum/builtin.hpp"
#include "continuum/complex_io.hpp"
#include "continuum/error.hpp"
#include "continuum/export.hpp"
#include "continuum/function_io.hpp"
#include "continuum/pattern_io.hpp"
#include "continuum/svg.hpp"

using namespace continuum;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("io_test_" + name) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("pattern files round-trip for every built-in") {
    for (const auto& name : builtin_pattern_names()) {
        const auto p = builtin_pattern(name).value();
        const std::string text = save_pattern(p);
        const auto back = parse_pattern(text);
        CHECK(back == p);
        CHECK(save_pattern(back) == text);
    }
}

TEST_CASE("unknown pattern fields are rejected") {
    auto j = pattern_to_json(euclid(1));
    j["chrome"] = 1;
    CHECK_THROWS_AS(pattern_from_json(j), InputError);
    CHECK_THROWS_AS(parse_pattern("{not json"), InputError);
}

TEST_CASE("pattern validation failures carry a message") {
    auto j = pattern_to_json(euclid(1));
    j["adj_d"] = nlohmann::ordered_json::array(); // disconnected
    CHECK_THROWS_AS(pattern_from_json(j), InputError);
    auto k = pattern_to_json(euclid(1));
    k["m_rules"][0]["children"] = nlohmann::ordered_json::array();
    CHECK_THROWS_AS(pattern_from_json(k), InputError);
}

TEST_CASE("load_pattern resolves built-ins then files") {
    CHECK(load_pattern("euclid2") == euclid(2));
    TempFile file("pattern.json", save_pattern(sierpinski_triangle()));
    CHECK(load_pattern(file.path) == sierpinski_triangle());
    CHECK_THROWS_AS(load_pattern("no_such_pattern"), InputError);
}

TEST_CASE("complex files round-trip") {
    auto p = euclid(2);
    std::vector<std::uint8_t> colors(16, 1);
    colors[3] = 2;
    colors[6] = 2;
    const Complex cx(std::move(p), 2, std::move(colors));
    const std::string text = save_complex(cx);
    const Complex back = parse_complex(text);
    CHECK(back.depth() == cx.depth());
    CHECK(back.colors() == cx.colors());
    CHECK(save_complex(back) == text);
}

TEST_CASE("complex files reject unknown fields and bad cells") {
    CHECK_THROWS_AS(parse_complex(R"({"pattern":"euclid2","depth":2,"shade":1})"), InputError);
    CHECK_THROWS_AS(parse_complex(R"({"pattern":"euclid2","depth":2,"colors":{"a":2}})"),
                    InputError);
    CHECK_THROWS_AS(parse_complex(R"({"pattern":"nope","depth":2})"), InputError);
}

TEST_CASE("complex with an inline pattern") {
    const std::string inline_pattern = save_pattern(euclid(2));
    const std::string text = std::string(R"({"pattern":)") + inline_pattern +
                             R"(,"depth":1,"default":1,"colors":{"b":2}})";
    const Complex cx = parse_complex(text);
    CHECK(cx.color_of_index(1) == 2);
    CHECK(cx.color_of_index(0) == 1);
}

TEST_CASE("bitmap loading maps zero to black with rows top to bottom") {
    // 2x2 P1 bitmap: top row "0 1", bottom row "1 0". In PNM text, 0 is the
    // raw sample; the loader colors 0 black.
    TempFile file("image.pbm", "P1\n2 2\n0 1\n1 0\n");
    const Complex cx = complex_from_image(file.path);
    CHECK(cx.depth() == 1);
    const auto ab = cx.pattern().alphabet();
    // Top-left pixel 0 -> cell c (x=0, y=1) black.
    CHECK(cx.color_of_index(cell_index(parse_cell("c", ab), 4)) == Complex::kBlack);
    CHECK(cx.color_of_index(cell_index(parse_cell("d", ab), 4)) == Complex::kWhite);
    CHECK(cx.color_of_index(cell_index(parse_cell("a", ab), 4)) == Complex::kWhite);
    CHECK(cx.color_of_index(cell_index(parse_cell("b", ab), 4)) == Complex::kBlack);
}

TEST_CASE("binary and ascii graymaps agree") {
    const std::string header = "P2\n4 4\n255\n";
    std::string ascii = header;
    std::string raw = "P5\n4 4\n255\n";
    for (int i = 0; i < 16; ++i) {
        const int v = i % 3 == 0 ? 0 : 200;
        ascii += std::to_string(v) + "\n";
        raw += static_cast<char>(v);
    }
    TempFile a("gray.pgm", ascii);
    TempFile b("gray_raw.pgm", raw);
    CHECK(complex_from_image(a.path).colors() == complex_from_image(b.path).colors());
}

TEST_CASE("images must be square powers of two") {
    TempFile file("bad.pbm", "P1\n3 3\n0 0 0 0 0 0 0 0 0\n");
    CHECK_THROWS_AS(complex_from_image(file.path), InputError);
}

TEST_CASE("function files round-trip") {
    const auto p = euclid(1);
    std::map<Cell, Cell> table;
    for (int k = 0; k <= 2; ++k)
        for (std::uint64_t i = 0; i < cell_count(2, k); ++i) {
            const Cell c = index_cell(i, 2, k);
            table[c] = c;
        }
    const auto f = CellFunction::table(p, p, 2, std::move(table));
    const std::string text = save_function(f);
    const auto back = parse_function(text);
    CHECK(back.k_max() == 2);
    CHECK(back(parse_cell("a.b", p.alphabet())) == parse_cell("a.b", p.alphabet()));
    CHECK(save_function(back) == text);
    CHECK_THROWS_AS(parse_function(R"({"domain":"euclid1","codomain":"euclid1","k_max":1,)"
                                   R"("map":{"":""},"extra":1})"),
                    InputError);
}

TEST_CASE("graph exports are canonical") {
    const auto p = euclid(2);
    const auto g = level_graph(p, 2);
    const std::string dot = graph_to_dot(g, p);
    CHECK(dot == graph_to_dot(level_graph(p, 2), p));
    CHECK(dot.find("\"a.d\" -- \"b.c\"") != std::string::npos);
    CHECK(dot.find("[origin=rule]") != std::string::npos);
    CHECK(dot.find("[origin=base]") != std::string::npos);

    const auto j = graph_to_json(g, p);
    CHECK(j["depth"] == 2);
    CHECK(j["nodes"].size() == 16);
    CHECK(j["nodes"][0] == "a.a");
    CHECK(j["edges"].size() == 24);
    // Edges sorted by index pair.
    for (std::size_t i = 1; i < j["edges"].size(); ++i) {
        const auto& prev = j["edges"][i - 1];
        const auto& cur = j["edges"][i];
        const bool ordered = prev[0] < cur[0] || (prev[0] == cur[0] && prev[1] < cur[1]);
        CHECK(ordered);
    }
}

TEST_CASE("svg renderings are deterministic and shaped as expected") {
    const auto interval = render_pattern_svg(euclid(1), 3);
    CHECK(interval == render_pattern_svg(euclid(1), 3));
    CHECK(std::count(interval.begin(), interval.end(), '\n') > 8); // 8 rects + frame

    const auto carpet = render_pattern_svg(sierpinski_carpet(), 2);
    std::size_t rects = 0, pos = 0;
    while ((pos = carpet.find("<rect", pos)) != std::string::npos) {
        ++rects;
        ++pos;
    }
    CHECK(rects == 64);

    const auto triangle = render_pattern_svg(sierpinski_triangle(), 2);
    std::size_t polys = 0;
    pos = 0;
    while ((pos = triangle.find("<polygon", pos)) != std::string::npos) {
        ++polys;
        ++pos;
    }
    CHECK(polys == 9);

    CHECK_THROWS_AS(render_pattern_svg(euclid(3), 2), UnsupportedPatternError);
}

TEST_CASE("complex svg fills cells by color") {
    auto p = euclid(2);
    std::vector<std::uint8_t> colors(16, 1);
    colors[0] = 2;
    const Complex cx(std::move(p), 2, std::move(colors));
    const auto svg = render_complex_svg(cx);
    CHECK(svg.find("#000000") != std::string::npos);
    CHECK(svg.find("#ffffff") != std::string::npos);
    CHECK(svg == render_complex_svg(cx));
}

TEST_CASE("shape tree exports") {
    auto p = euclid(2);
    std::vector<std::uint8_t> colors(16, 1);
    for (const char* w : {"a.d", "b.c", "c.b", "d.a"})
        colors[cell_index(parse_cell(w, p.alphabet()), 4)] = 2;
    const Complex cx(std::move(p), 2, std::move(colors));
    const auto tree = segment_adjacency(cx);
    const auto dot = tree_to_dot(tree);
    CHECK(dot.find("s2") != std::string::npos);
    const auto j = tree_to_json(tree);
    CHECK(j["nodes"].size() == 3);
    CHECK(j["edges"].size() == 2);
    CHECK(j["is_tree"] == true);
    CHECK(j["root"] == 2);
}
