#include "continuum/svg.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "continuum/builtin.hpp"
#include "continuum/error.hpp"
#include "continuum/level_graph.hpp"

namespace continuum {

namespace {

struct Point {
    double x, y;
};

std::string num(double v) {
    char buf[32];
    if (v == static_cast<long long>(v)) {
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
    } else {
        std::snprintf(buf, sizeof(buf), "%.2f", v);
    }
    return buf;
}

const char* fill_for_color(int color) {
    switch (color) {
    case 1: return "#ffffff";
    case 2: return "#000000";
    case 3: return "#e41a1c";
    case 4: return "#377eb8";
    case 5: return "#4daf4a";
    default: return "#999999";
    }
}

enum class Embedding { Interval, Grid, Carpet, Triangle };

Embedding embedding_of(const AdjacencyPattern& p) {
    if (auto n = euclid_dimension(p)) {
        if (*n == 1)
            return Embedding::Interval;
        if (*n == 2)
            return Embedding::Grid;
        throw UnsupportedPatternError("no geometric embedding for dimension " +
                                      std::to_string(*n) + "; export the graph instead");
    }
    if (p.d() == sierpinski_triangle().d() && p.m_rules() == sierpinski_triangle().m_rules())
        return Embedding::Triangle;
    if (p.d() == sierpinski_carpet().d() && p.m_rules() == sierpinski_carpet().m_rules())
        return Embedding::Carpet;
    throw UnsupportedPatternError("pattern '" + p.name() +
                                  "' has no geometric embedding; export the graph instead");
}

// Carpet symbol positions, must match the pattern construction.
constexpr std::array<std::pair<int, int>, 8> kCarpetPos = {{
    {0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2},
}};

// Axis-aligned square of a cell, in a y-down canvas of side `side`.
void cell_square(Embedding emb, const Cell& c, int depth, double side, Point& origin,
                 double& size) {
    if (emb == Embedding::Interval) {
        std::uint64_t i = cell_index(c, 2);
        size = side / static_cast<double>(std::uint64_t{1} << depth);
        origin = {static_cast<double>(i) * size, 0};
        return;
    }
    if (emb == Embedding::Grid) {
        std::uint64_t x = 0, y = 0;
        for (int d = 0; d < depth; ++d) {
            x = (x << 1) | (c[d] & 1);
            y = (y << 1) | ((c[d] >> 1) & 1);
        }
        const std::uint64_t cells = std::uint64_t{1} << depth;
        size = side / static_cast<double>(cells);
        origin = {static_cast<double>(x) * size,
                  static_cast<double>(cells - 1 - y) * size};
        return;
    }
    // Carpet
    std::uint64_t x = 0, y = 0;
    for (int d = 0; d < depth; ++d) {
        x = x * 3 + static_cast<std::uint64_t>(kCarpetPos[c[d]].first);
        y = y * 3 + static_cast<std::uint64_t>(kCarpetPos[c[d]].second);
    }
    std::uint64_t cells = 1;
    for (int d = 0; d < depth; ++d)
        cells *= 3;
    size = side / static_cast<double>(cells);
    origin = {static_cast<double>(x) * size, static_cast<double>(cells - 1 - y) * size};
}

// Triangle of a gasket cell: the three vertex images under the contraction
// maps picked by the word.
std::array<Point, 3> gasket_triangle(const Cell& c, double side) {
    const std::array<Point, 3> corners = {{{0, side}, {side, side}, {side / 2, 0}}};
    double scale = 1.0;
    Point offset{0, 0};
    for (int d = 0; d < c.depth(); ++d) {
        const Point& p = corners[c[d]];
        offset.x += scale / 2 * p.x;
        offset.y += scale / 2 * p.y;
        scale /= 2;
    }
    std::array<Point, 3> out;
    for (int i = 0; i < 3; ++i)
        out[i] = {offset.x + scale * corners[i].x, offset.y + scale * corners[i].y};
    return out;
}

Point cell_center(Embedding emb, const Cell& c, int depth, double side) {
    if (emb == Embedding::Triangle) {
        const auto t = gasket_triangle(c, side);
        return {(t[0].x + t[1].x + t[2].x) / 3, (t[0].y + t[1].y + t[2].y) / 3};
    }
    Point origin;
    double size;
    cell_square(emb, c, depth, side, origin, size);
    return {origin.x + size / 2, origin.y + size / 2};
}

std::string render(const AdjacencyPattern& pattern, int depth, const Complex* cx, bool overlay) {
    const Embedding emb = embedding_of(pattern);
    const double side = 512;
    const double height = emb == Embedding::Interval ? side / 8 : side;

    const LevelGraph graph = cx ? cx->graph() : level_graph(pattern, depth);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(side) << " "
        << num(height) << "\">\n";

    const std::size_t l = pattern.alphabet_size();
    for (std::uint64_t i = 0; i < graph.node_count(); ++i) {
        const Cell c = index_cell(i, l, depth);
        const char* fill = cx ? fill_for_color(cx->color_of_index(i)) : "#ffffff";
        if (emb == Embedding::Triangle) {
            const auto t = gasket_triangle(c, side);
            out << "  <polygon points=\"" << num(t[0].x) << "," << num(t[0].y) << " "
                << num(t[1].x) << "," << num(t[1].y) << " " << num(t[2].x) << "," << num(t[2].y)
                << "\" fill=\"" << fill << "\" stroke=\"#666666\" stroke-width=\"1\"/>\n";
        } else {
            Point origin;
            double size;
            cell_square(emb, c, depth, side, origin, size);
            const double h = emb == Embedding::Interval ? height : size;
            out << "  <rect x=\"" << num(origin.x) << "\" y=\"" << num(origin.y) << "\" width=\""
                << num(size) << "\" height=\"" << num(h) << "\" fill=\"" << fill
                << "\" stroke=\"#666666\" stroke-width=\"1\"/>\n";
        }
    }

    if (overlay) {
        for (const Edge& e : graph.edges()) {
            Point a = cell_center(emb, index_cell(e.u, l, depth), depth, side);
            Point b = cell_center(emb, index_cell(e.v, l, depth), depth, side);
            if (emb == Embedding::Interval) {
                a.y = height / 2;
                b.y = height / 2;
            }
            out << "  <line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
                << num(b.x) << "\" y2=\"" << num(b.y)
                << "\" stroke=\"#cc3333\" stroke-width=\"1.5\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string render_pattern_svg(const AdjacencyPattern& pattern, int depth, bool overlay) {
    if (depth < 1)
        throw InputError("depth must be at least 1");
    return render(pattern, depth, nullptr, overlay);
}

std::string render_complex_svg(const Complex& cx, bool overlay) {
    return render(cx.pattern(), cx.depth(), &cx, overlay);
}

} // namespace continuum
