#include "continuum/export.hpp"

#include <sstream>

namespace continuum {

namespace {
using nlohmann::ordered_json;
} // namespace

std::string graph_to_dot(const LevelGraph& graph, const AdjacencyPattern& pattern) {
    std::ostringstream out;
    out << "graph \"" << pattern.name() << "_k" << graph.depth() << "\" {\n";
    out << "  node [shape=box];\n";
    for (std::uint64_t i = 0; i < graph.node_count(); ++i)
        out << "  \"" << format_cell(graph.cell(i), pattern.alphabet()) << "\";\n";
    for (const Edge& e : graph.edges())
        out << "  \"" << format_cell(graph.cell(e.u), pattern.alphabet()) << "\" -- \""
            << format_cell(graph.cell(e.v), pattern.alphabet()) << "\" [origin="
            << edge_origin_name(e.origin) << "];\n";
    out << "}\n";
    return out.str();
}

ordered_json graph_to_json(const LevelGraph& graph, const AdjacencyPattern& pattern) {
    ordered_json j;
    j["depth"] = graph.depth();
    ordered_json nodes = ordered_json::array();
    for (std::uint64_t i = 0; i < graph.node_count(); ++i)
        nodes.push_back(format_cell(graph.cell(i), pattern.alphabet()));
    j["nodes"] = std::move(nodes);
    ordered_json edges = ordered_json::array();
    for (const Edge& e : graph.edges())
        edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j;
}

std::string tree_to_dot(const ShapeTree& tree) {
    std::ostringstream out;
    out << "graph \"shape\" {\n";
    for (const SegmentInfo& s : tree.nodes) {
        out << "  s" << s.id << " [label=\"" << s.id << ":" << (s.color == 1 ? "white" : s.color == 2 ? "black" : ("color" + std::to_string(s.color)))
            << " (" << s.size << ")\"";
        if (s.id == tree.root)
            out << " shape=doublecircle";
        if (s.color == 2)
            out << " style=filled fillcolor=gray";
        out << "];\n";
    }
    for (const auto& [a, b] : tree.edges)
        out << "  s" << a << " -- s" << b << ";\n";
    out << "}\n";
    return out.str();
}

ordered_json tree_to_json(const ShapeTree& tree) {
    ordered_json j;
    ordered_json nodes = ordered_json::array();
    for (const SegmentInfo& s : tree.nodes) {
        ordered_json node;
        node["id"] = s.id;
        node["color"] = s.color;
        node["size"] = s.size;
        node["contains_border"] = s.contains_border;
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    ordered_json edges = ordered_json::array();
    for (const auto& [a, b] : tree.edges)
        edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["root"] = tree.root;
    j["is_tree"] = tree.is_tree;
    j["bipartite"] = tree.bipartite_by_color;
    return j;
}

ordered_json segment_map_to_json(const SegmentMap& map, const Complex& cx) {
    ordered_json j;
    ordered_json segments = ordered_json::array();
    for (const SegmentInfo& s : map.segments()) {
        ordered_json seg;
        seg["id"] = s.id;
        seg["color"] = s.color;
        seg["size"] = s.size;
        seg["contains_border"] = s.contains_border;
        segments.push_back(std::move(seg));
    }
    j["segments"] = std::move(segments);
    ordered_json cells = ordered_json::object();
    for (std::uint64_t i = 0; i < cx.cell_node_count(); ++i)
        cells[format_cell(cx.cell(i), cx.pattern().alphabet())] = map.segment_of_index(i);
    j["cells"] = std::move(cells);
    j["border_segment"] = map.border_segment();
    return j;
}

ordered_json refinement_report_to_json(const RefinementReport& report,
                                       const AdjacencyPattern& pattern) {
    ordered_json j;
    j["property"] = "refinement";
    j["pass"] = report.pass;
    ordered_json violations = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json entry;
        entry["depth"] = v.depth;
        entry["edge"] = {format_cell(v.left, pattern.alphabet()),
                         format_cell(v.right, pattern.alphabet())};
        violations.push_back(std::move(entry));
    }
    j["violations"] = std::move(violations);
    return j;
}

ordered_json connectivity_report_to_json(const ConnectivityReport& report) {
    ordered_json j;
    j["property"] = "connectivity";
    j["pass"] = report.pass;
    ordered_json levels = ordered_json::array();
    for (const auto& level : report.levels) {
        ordered_json entry;
        entry["depth"] = level.depth;
        entry["connected"] = level.connected;
        entry["components"] = level.components;
        levels.push_back(std::move(entry));
    }
    j["levels"] = std::move(levels);
    return j;
}

ordered_json property_report_to_json(const PropertyReport& report) {
    ordered_json j;
    j["property"] = report.property;
    j["pass"] = report.pass;
    j["witnesses"] = report.witnesses;
    j["detail"] = report.detail;
    return j;
}

ordered_json function_report_to_json(const FunctionReport& report, const CellFunction& f) {
    ordered_json j;
    j["property"] = report.property;
    j["pass"] = report.pass;
    ordered_json violations = ordered_json::array();
    for (const auto& [x, y] : report.violations)
        violations.push_back({format_cell(x, f.domain().alphabet()),
                              format_cell(y, f.domain().alphabet())});
    j["violations"] = std::move(violations);
    ordered_json unverified = ordered_json::array();
    for (const auto& c : report.unverified)
        unverified.push_back(format_cell(c, f.domain().alphabet()));
    j["unverified"] = std::move(unverified);
    j["detail"] = report.detail;
    return j;
}

ordered_json witness_to_json(const BrouwerWitness& witness, const CellFunction& f) {
    const Alphabet& da = f.domain().alphabet();
    const Alphabet& ca = f.codomain().alphabet();
    ordered_json j;
    j["edge"] = {format_cell(witness.left, da), format_cell(witness.right, da)};
    j["images"] = {format_cell(witness.left_image, ca), format_cell(witness.right_image, ca)};
    j["depth"] = witness.depth;
    j["streams"] = {format_cell(witness.left_stream, da), format_cell(witness.right_stream, da)};
    j["image_streams"] = {format_cell(witness.left_image_stream, ca),
                          format_cell(witness.right_image_stream, ca)};
    j["inputs_equivalent"] = witness.inputs_equivalent;
    j["images_equivalent"] = witness.images_equivalent;
    return j;
}

ordered_json census_to_json(const BorderCensus& census, int depth) {
    ordered_json j;
    j["depth"] = depth;
    j["rank_counts"] = census.rank_counts;
    j["border_total"] = census.border_total;
    j["interior"] = census.interior;
    return j;
}

} // namespace continuum
