// Command-line front end: pattern inspection, graph generation and export,
// structural checks, border queries, complexes and shape trees, cell
// functions, and SVG rendering.
//
// Exit codes: 0 success / property holds, 1 property violated or witness
// found, 2 input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "continuum/analysis.hpp"
#include "continuum/builtin.hpp"
#include "continuum/complex.hpp"
#include "continuum/complex_io.hpp"
#include "continuum/error.hpp"
#include "continuum/export.hpp"
#include "continuum/function.hpp"
#include "continuum/function_io.hpp"
#include "continuum/level_graph.hpp"
#include "continuum/pattern_io.hpp"
#include "continuum/svg.hpp"

namespace {

using namespace continuum;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw InputError("cannot write to '" + out_path + "'");
    out << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

CellFunction resolve_function(const std::string& name, const std::string& pattern_ref,
                              int k_max) {
    AdjacencyPattern p = load_pattern(pattern_ref);
    if (auto f = CellFunction::builtin(name, p, k_max))
        return *f;
    return load_function(name);
}

// ----------------------------------------------------------------------
// pattern
// ----------------------------------------------------------------------

int cmd_pattern_list(const std::string& out) {
    ordered_json j = ordered_json::array();
    for (const auto& name : builtin_pattern_names()) {
        const auto p = builtin_pattern(name).value();
        ordered_json entry;
        entry["name"] = name;
        entry["alphabet_size"] = p.alphabet_size();
        entry["gluing"] = gluing_kind_name(p.gluing().kind);
        j.push_back(std::move(entry));
    }
    emit(dump(j), out);
    return kOk;
}

int cmd_pattern_show(const std::string& pattern_ref, const std::string& out) {
    emit(save_pattern(load_pattern(pattern_ref)), out);
    return kOk;
}

int cmd_pattern_validate(const std::string& pattern_ref, const std::string& out) {
    const auto p = load_pattern(pattern_ref); // throws on invalid input
    ordered_json j;
    j["name"] = p.name();
    j["valid"] = true;
    j["alphabet_size"] = p.alphabet_size();
    j["rules"] = p.m_rules().size();
    emit(dump(j), out);
    return kOk;
}

// ----------------------------------------------------------------------
// graph
// ----------------------------------------------------------------------

int cmd_graph_gen(const std::string& pattern_ref, int depth, const std::string& format,
                  const std::string& out) {
    const auto p = load_pattern(pattern_ref);
    const auto g = level_graph(p, depth);
    if (format == "dot")
        emit(graph_to_dot(g, p), out);
    else if (format == "json")
        emit(dump(graph_to_json(g, p)), out);
    else
        throw InputError("graph gen supports --format dot or json");
    return kOk;
}

// ----------------------------------------------------------------------
// check
// ----------------------------------------------------------------------

int cmd_check_refinement(const std::string& pattern_ref, int depth, const std::string& format,
                         const std::string& out) {
    const auto p = load_pattern(pattern_ref);
    const auto report = check_refinement(p, depth);
    if (format == "json") {
        emit(dump(refinement_report_to_json(report, p)), out);
    } else {
        std::string text = report.pass ? "refinement: pass\n" : "refinement: FAIL\n";
        for (const auto& v : report.violations)
            text += "  orphaned edge at depth " + std::to_string(v.depth) + ": " +
                    format_cell(v.left, p.alphabet()) + " -- " +
                    format_cell(v.right, p.alphabet()) + "\n";
        emit(text, out);
    }
    return report.pass ? kOk : kViolation;
}

int cmd_check_connectivity(const std::string& pattern_ref, int depth, const std::string& format,
                           const std::string& out) {
    const auto p = load_pattern(pattern_ref);
    const auto report = connectivity(p, depth);
    if (format == "json") {
        emit(dump(connectivity_report_to_json(report)), out);
    } else {
        std::string text = report.pass ? "connectivity: pass\n" : "connectivity: FAIL\n";
        for (const auto& level : report.levels)
            text += "  depth " + std::to_string(level.depth) + ": " +
                    std::to_string(level.components) + " component(s)\n";
        emit(text, out);
    }
    return report.pass ? kOk : kViolation;
}

int report_property(const PropertyReport& report, const std::string& format,
                    const std::string& out) {
    if (format == "json") {
        emit(dump(property_report_to_json(report)), out);
    } else {
        std::string text = report.property + ": " + (report.pass ? "pass" : "FAIL") + "\n";
        if (!report.detail.empty())
            text += "  " + report.detail + "\n";
        for (const auto& w : report.witnesses)
            text += "  witness: " + w + "\n";
        emit(text, out);
    }
    return report.pass ? kOk : kViolation;
}

int cmd_check_dimension(const std::string& pattern_ref, const std::string& format,
                        const std::string& out) {
    const auto p = load_pattern(pattern_ref);
    const auto n = dimension(p);
    if (format == "json") {
        ordered_json j;
        j["pattern"] = p.name();
        if (n)
            j["dimension"] = *n;
        else
            j["dimension"] = nullptr;
        emit(dump(j), out);
    } else {
        emit(n ? "dimension: " + std::to_string(*n) + "\n" : "dimension: undefined\n", out);
    }
    return n ? kOk : kViolation;
}

// ----------------------------------------------------------------------
// borders
// ----------------------------------------------------------------------

int cmd_borders(const std::string& pattern_ref, int depth, const std::string& cell_word,
                bool cell_given, const std::string& format, const std::string& out) {
    const auto p = load_pattern(pattern_ref);
    if (cell_given) {
        const Cell c = parse_cell(cell_word, p.alphabet());
        const auto rank = border_rank(p, c);
        if (format == "json") {
            ordered_json j;
            j["cell"] = cell_word;
            if (rank)
                j["rank"] = *rank;
            else
                j["rank"] = nullptr;
            j["border"] = rank.has_value();
            emit(dump(j), out);
        } else {
            emit(rank ? "rank " + std::to_string(*rank) + "\n" : "interior\n", out);
        }
        return kOk;
    }
    const auto census = border_census(p, depth);
    if (format == "json") {
        emit(dump(census_to_json(census, depth)), out);
    } else {
        std::string text = "depth " + std::to_string(depth) + ":\n";
        for (std::size_t j = 0; j < census.rank_counts.size(); ++j)
            text += "  rank " + std::to_string(j) + ": " +
                    std::to_string(census.rank_counts[j]) + "\n";
        text += "  border total: " + std::to_string(census.border_total) + "\n";
        text += "  interior: " + std::to_string(census.interior) + "\n";
        emit(text, out);
    }
    return kOk;
}

// ----------------------------------------------------------------------
// complex
// ----------------------------------------------------------------------

Complex load_complex_arg(const std::string& file, const std::string& image) {
    if (!file.empty() && !image.empty())
        throw InputError("give either --file or --image, not both");
    if (!file.empty())
        return load_complex(file);
    if (!image.empty())
        return complex_from_image(image);
    throw InputError("a complex is needed: --file <json> or --image <pbm/pgm>");
}

int cmd_complex_segments(const std::string& file, const std::string& image,
                         const std::string& format, const std::string& out) {
    const Complex cx = load_complex_arg(file, image);
    const auto map = segments(cx);
    if (format == "json") {
        emit(dump(segment_map_to_json(map, cx)), out);
    } else {
        std::string text;
        for (const auto& s : map.segments())
            text += "segment " + std::to_string(s.id) + ": color " + std::to_string(s.color) +
                    ", size " + std::to_string(s.size) +
                    (s.contains_border ? " (border)" : "") + "\n";
        emit(text, out);
    }
    return kOk;
}

int cmd_complex_tree(const std::string& file, const std::string& image, const std::string& format,
                     const std::string& out) {
    const Complex cx = load_complex_arg(file, image);
    const auto tree = segment_adjacency(cx);
    if (format == "dot")
        emit(tree_to_dot(tree), out);
    else
        emit(dump(tree_to_json(tree)), out);
    return kOk;
}

int cmd_complex_path(const std::string& file, const std::string& image, const std::string& from,
                     const std::string& to, const std::string& out) {
    const Complex cx = load_complex_arg(file, image);
    const auto& ab = cx.pattern().alphabet();
    auto site = [&](const std::string& w) {
        return w == "border" ? Site::border() : Site::cell(parse_cell(w, ab));
    };
    const auto witness = path(cx, site(from), site(to));
    ordered_json j;
    j["from"] = from;
    j["to"] = to;
    if (witness) {
        ordered_json steps = ordered_json::array();
        for (const auto& s : *witness)
            steps.push_back(s.is_border() ? "border" : format_cell(s.as_cell(), ab));
        j["path"] = std::move(steps);
    } else {
        j["path"] = nullptr;
    }
    emit(dump(j), out);
    return witness ? kOk : kViolation;
}

int cmd_complex_sample(const std::string& pattern_ref, int depth, int samples,
                       std::uint64_t seed, const std::string& fixture_path,
                       const std::string& out) {
    const auto p = load_pattern(pattern_ref);
    int trees = 0, cycles = 0;
    bool bipartite = true;
    std::optional<std::uint64_t> first_cycle_seed;
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t sample_seed = seed + static_cast<std::uint64_t>(i);
        const Complex cx = random_complex(p, depth, 2, sample_seed);
        const auto tree = segment_adjacency(cx);
        bipartite = bipartite && tree.bipartite_by_color;
        if (tree.is_tree) {
            ++trees;
        } else {
            ++cycles;
            if (!first_cycle_seed) {
                first_cycle_seed = sample_seed;
                if (!fixture_path.empty())
                    emit(save_complex(cx), fixture_path);
            }
        }
    }
    ordered_json j;
    j["pattern"] = p.name();
    j["depth"] = depth;
    j["samples"] = samples;
    j["seed"] = seed;
    j["bipartite"] = bipartite;
    j["trees"] = trees;
    j["non_trees"] = cycles;
    if (first_cycle_seed)
        j["first_non_tree_seed"] = *first_cycle_seed;
    if (!fixture_path.empty() && first_cycle_seed)
        j["counterexample"] = fixture_path;
    emit(dump(j), out);
    return bipartite ? kOk : kViolation;
}

// ----------------------------------------------------------------------
// fn
// ----------------------------------------------------------------------

int cmd_fn_check(const CellFunction& f, int depth, const std::string& what,
                 const std::string& format, const std::string& out) {
    std::vector<FunctionReport> reports;
    if (what == "monotonic" || what == "all")
        reports.push_back(is_monotonic(f, depth));
    if (what == "strict" || what == "all")
        reports.push_back(is_strict(f, depth));
    if (what == "continuous" || what == "all")
        reports.push_back(is_continuous(f, depth));
    if (reports.empty())
        throw InputError("--what must be monotonic, strict, continuous or all");

    bool pass = true;
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& r : reports) {
            j.push_back(function_report_to_json(r, f));
            pass = pass && r.pass;
        }
        emit(dump(j), out);
    } else {
        std::string text;
        for (const auto& r : reports) {
            text += r.property + ": " + (r.pass ? "pass" : "FAIL") + "\n";
            pass = pass && r.pass;
        }
        emit(text, out);
    }
    return pass ? kOk : kViolation;
}

int cmd_fn_brouwer(const CellFunction& f, int depth, const std::string& format,
                   const std::string& out) {
    const auto witness = brouwer_witness(f, depth);
    if (format == "json") {
        if (witness) {
            emit(dump(witness_to_json(*witness, f)), out);
        } else {
            ordered_json j;
            j["witness"] = nullptr;
            j["continuous_up_to"] = depth;
            emit(dump(j), out);
        }
    } else {
        if (witness) {
            const auto& da = f.domain().alphabet();
            emit("witness: edge " + format_cell(witness->left, da) + " -- " +
                     format_cell(witness->right, da) + ", streams " +
                     format_cell(witness->left_stream, da) + " / " +
                     format_cell(witness->right_stream, da) + "\n",
                 out);
        } else {
            emit("no witness up to depth " + std::to_string(depth) + "\n", out);
        }
    }
    return witness ? kViolation : kOk;
}

int cmd_fn_eval(const CellFunction& f, const std::string& cell_word, const std::string& out) {
    const Cell c = parse_cell(cell_word, f.domain().alphabet());
    emit(format_cell(stream_image(f, c), f.codomain().alphabet()) + "\n", out);
    return kOk;
}

int cmd_fn_equivalent(const std::string& pattern_ref, const std::string& s1,
                      const std::string& s2, const std::string& out) {
    const auto p = load_pattern(pattern_ref);
    const bool eq = streams_equivalent(p, parse_cell(s1, p.alphabet()),
                                       parse_cell(s2, p.alphabet()));
    emit(eq ? "equivalent\n" : "not equivalent\n", out);
    return eq ? kOk : kViolation;
}

// ----------------------------------------------------------------------
// render
// ----------------------------------------------------------------------

int cmd_render(const std::string& pattern_ref, int depth, const std::string& file,
               const std::string& image, bool overlay, const std::string& out) {
    if (!file.empty() || !image.empty()) {
        const Complex cx = load_complex_arg(file, image);
        emit(render_complex_svg(cx, overlay), out);
    } else {
        if (pattern_ref.empty())
            throw InputError("render needs --pattern with --depth, or --file/--image");
        emit(render_pattern_svg(load_pattern(pattern_ref), depth, overlay), out);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete continuum engine: cells, adjacency patterns, complexes"};
    app.require_subcommand(1);

    std::string pattern_ref, out, format = "text", cell_word, file, image;
    std::string fn_name = "identity", what = "all", from, to, s1, s2, fixture;
    int depth = 2, samples = 100, k_max = 32, radius = 1;
    std::uint64_t seed = 1;
    bool overlay = false;

    // pattern
    auto* pattern = app.add_subcommand("pattern", "inspect pattern definitions");
    pattern->require_subcommand(1);
    auto* pat_list = pattern->add_subcommand("list", "list the built-in patterns");
    pat_list->add_option("--out", out);
    auto* pat_show = pattern->add_subcommand("show", "print a pattern definition file");
    pat_show->add_option("--pattern", pattern_ref, "built-in name or file")->required();
    pat_show->add_option("--out", out);
    auto* pat_validate = pattern->add_subcommand("validate", "parse and validate a pattern file");
    pat_validate->add_option("--pattern", pattern_ref)->required();
    pat_validate->add_option("--out", out);

    // graph
    auto* graph = app.add_subcommand("graph", "generate level graphs");
    graph->require_subcommand(1);
    auto* graph_gen = graph->add_subcommand("gen", "generate the depth-k adjacency graph");
    graph_gen->add_option("--pattern", pattern_ref)->required();
    graph_gen->add_option("--depth", depth)->required();
    graph_gen->add_option("--format", format, "dot or json");
    graph_gen->add_option("--out", out);

    // check
    auto* check = app.add_subcommand("check", "structural checks");
    check->require_subcommand(1);
    auto* chk_ref = check->add_subcommand("refinement", "adjacent cells keep adjacent children");
    chk_ref->add_option("--pattern", pattern_ref)->required();
    chk_ref->add_option("--depth", depth)->required();
    chk_ref->add_option("--format", format);
    chk_ref->add_option("--out", out);
    auto* chk_conn = check->add_subcommand("connectivity", "every level graph is connected");
    chk_conn->add_option("--pattern", pattern_ref)->required();
    chk_conn->add_option("--depth", depth)->required();
    chk_conn->add_option("--format", format);
    chk_conn->add_option("--out", out);
    auto* chk_ind = check->add_subcommand("indiscernibility",
                                          "the base automorphisms act transitively");
    chk_ind->add_option("--pattern", pattern_ref)->required();
    chk_ind->add_option("--format", format);
    chk_ind->add_option("--out", out);
    auto* chk_hom = check->add_subcommand("homogeneity",
                                          "non-border neighborhoods are isomorphic");
    chk_hom->add_option("--pattern", pattern_ref)->required();
    chk_hom->add_option("--depth", depth)->required();
    chk_hom->add_option("--radius", radius, "neighborhood radius (default 1)");
    chk_hom->add_option("--format", format);
    chk_hom->add_option("--out", out);
    auto* chk_dim = check->add_subcommand("dimension", "common degree when the properties hold");
    chk_dim->add_option("--pattern", pattern_ref)->required();
    chk_dim->add_option("--format", format);
    chk_dim->add_option("--out", out);

    // borders
    auto* borders = app.add_subcommand("borders", "border census or a single cell's rank");
    borders->add_option("--pattern", pattern_ref)->required();
    borders->add_option("--depth", depth);
    auto* cell_opt = borders->add_option("--cell", cell_word, "query one cell");
    borders->add_option("--format", format);
    borders->add_option("--out", out);

    // complex
    auto* complex = app.add_subcommand("complex", "colorings, segments and shape trees");
    complex->require_subcommand(1);
    auto* cx_seg = complex->add_subcommand("segments", "compute the segment quotient");
    cx_seg->add_option("--file", file, "complex JSON file");
    cx_seg->add_option("--image", image, "PBM/PGM bitmap");
    cx_seg->add_option("--format", format);
    cx_seg->add_option("--out", out);
    auto* cx_tree = complex->add_subcommand("tree", "compute the shape tree");
    cx_tree->add_option("--file", file);
    cx_tree->add_option("--image", image);
    cx_tree->add_option("--format", format, "json or dot");
    cx_tree->add_option("--out", out);
    auto* cx_path = complex->add_subcommand("path", "witness path between same-colored cells");
    cx_path->add_option("--file", file);
    cx_path->add_option("--image", image);
    cx_path->add_option("--from", from, "cell word, or 'border'")->required();
    cx_path->add_option("--to", to)->required();
    cx_path->add_option("--out", out);
    auto* cx_sample = complex->add_subcommand("sample", "random colorings: bipartite/tree stats");
    cx_sample->add_option("--pattern", pattern_ref)->required();
    cx_sample->add_option("--depth", depth)->required();
    cx_sample->add_option("--samples", samples);
    cx_sample->add_option("--seed", seed);
    cx_sample->add_option("--fixture", fixture, "write the first non-tree complex here");
    cx_sample->add_option("--out", out);

    // fn
    auto* fn = app.add_subcommand("fn", "cell functions");
    fn->require_subcommand(1);
    auto add_fn_options = [&](CLI::App* cmd) {
        cmd->add_option("--fn", fn_name, "identity, head_const, reverse, or a table file");
        cmd->add_option("--pattern", pattern_ref, "pattern for the built-ins (default euclid1)");
        cmd->add_option("--kmax", k_max);
        cmd->add_option("--out", out);
    };
    auto* fn_check = fn->add_subcommand("check", "monotonic / strict / continuous");
    add_fn_options(fn_check);
    fn_check->add_option("--depth", depth)->required();
    fn_check->add_option("--what", what, "monotonic, strict, continuous or all");
    fn_check->add_option("--format", format);
    auto* fn_brouwer = fn->add_subcommand("brouwer", "search for a continuity witness");
    add_fn_options(fn_brouwer);
    fn_brouwer->add_option("--depth", depth)->required();
    fn_brouwer->add_option("--format", format);
    auto* fn_eval = fn->add_subcommand("eval", "image of a cell");
    add_fn_options(fn_eval);
    fn_eval->add_option("--cell", cell_word)->required();
    auto* fn_eq = fn->add_subcommand("equivalent", "stream prefix equivalence");
    fn_eq->add_option("--pattern", pattern_ref)->required();
    fn_eq->add_option("--s1", s1)->required();
    fn_eq->add_option("--s2", s2)->required();
    fn_eq->add_option("--out", out);

    // render
    auto* render = app.add_subcommand("render", "SVG of a division or a complex");
    render->add_option("--pattern", pattern_ref);
    render->add_option("--depth", depth);
    render->add_option("--file", file);
    render->add_option("--image", image);
    render->add_flag("--overlay", overlay, "draw the adjacency graph on top");
    render->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (pat_list->parsed())
            return cmd_pattern_list(out);
        if (pat_show->parsed())
            return cmd_pattern_show(pattern_ref, out);
        if (pat_validate->parsed())
            return cmd_pattern_validate(pattern_ref, out);
        if (graph_gen->parsed())
            return cmd_graph_gen(pattern_ref, depth, format == "text" ? "dot" : format, out);
        if (chk_ref->parsed())
            return cmd_check_refinement(pattern_ref, depth, format, out);
        if (chk_conn->parsed())
            return cmd_check_connectivity(pattern_ref, depth, format, out);
        if (chk_ind->parsed())
            return report_property(check_indiscernibility(load_pattern(pattern_ref)), format, out);
        if (chk_hom->parsed())
            return report_property(check_homogeneity(load_pattern(pattern_ref), depth, radius),
                                   format, out);
        if (chk_dim->parsed())
            return cmd_check_dimension(pattern_ref, format, out);
        if (borders->parsed())
            return cmd_borders(pattern_ref, depth, cell_word, cell_opt->count() > 0, format, out);
        if (cx_seg->parsed())
            return cmd_complex_segments(file, image, format, out);
        if (cx_tree->parsed())
            return cmd_complex_tree(file, image, format == "text" ? "json" : format, out);
        if (cx_path->parsed())
            return cmd_complex_path(file, image, from, to, out);
        if (cx_sample->parsed())
            return cmd_complex_sample(pattern_ref, depth, samples, seed, fixture, out);
        if (fn_check->parsed() || fn_brouwer->parsed() || fn_eval->parsed()) {
            if (pattern_ref.empty())
                pattern_ref = "euclid1";
            const auto f = resolve_function(fn_name, pattern_ref, k_max);
            if (fn_check->parsed())
                return cmd_fn_check(f, depth, what, format, out);
            if (fn_brouwer->parsed())
                return cmd_fn_brouwer(f, depth, format, out);
            return cmd_fn_eval(f, cell_word, out);
        }
        if (fn_eq->parsed())
            return cmd_fn_equivalent(pattern_ref, s1, s2, out);
        if (render->parsed())
            return cmd_render(pattern_ref, depth, file, image, overlay, out);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedPatternError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    std::cerr << "error: no command\n";
    return kUsage;
}
