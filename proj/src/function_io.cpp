#include "continuum/function_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "continuum/builtin.hpp"
#include "continuum/error.hpp"
#include "continuum/pattern_io.hpp"

namespace continuum {

namespace {
using nlohmann::json;
using nlohmann::ordered_json;
} // namespace

ordered_json function_to_json(const CellFunction& f) {
    ordered_json j;
    auto pattern_ref = [](const AdjacencyPattern& p) -> ordered_json {
        const auto builtin = builtin_pattern(p.name());
        if (builtin && *builtin == p)
            return p.name();
        return pattern_to_json(p);
    };
    j["domain"] = pattern_ref(f.domain());
    j["codomain"] = pattern_ref(f.codomain());
    j["k_max"] = f.k_max();
    ordered_json map = ordered_json::object();
    if (f.is_table()) {
        // Cells ordered by depth, then lexicographically.
        const std::size_t l = f.domain().alphabet_size();
        for (int k = 0; k <= f.k_max(); ++k) {
            const std::uint64_t count = cell_count(l, k);
            for (std::uint64_t i = 0; i < count; ++i) {
                const Cell c = index_cell(i, l, k);
                map[format_cell(c, f.domain().alphabet())] =
                    format_cell(f(c), f.codomain().alphabet());
            }
        }
    } else {
        throw InputError("only table functions can be serialized; '" + f.name() +
                         "' is addressable by name");
    }
    j["map"] = std::move(map);
    return j;
}

CellFunction function_from_json(const json& j) {
    if (!j.is_object())
        throw InputError("function definition must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        static const std::set<std::string> allowed = {"domain", "codomain", "k_max", "map"};
        if (!allowed.contains(it.key()))
            throw InputError("unknown field '" + it.key() + "' in function definition");
    }
    for (const char* key : {"domain", "codomain", "k_max", "map"})
        if (!j.contains(key))
            throw InputError(std::string("function definition needs '") + key + "'");

    AdjacencyPattern domain = pattern_from_json_ref(j.at("domain"));
    AdjacencyPattern codomain = pattern_from_json_ref(j.at("codomain"));
    const int k_max = j.at("k_max").get<int>();
    const auto& entries = j.at("map");
    if (!entries.is_object())
        throw InputError("function 'map' must map cell words to cell words");
    std::map<Cell, Cell> table;
    for (auto it = entries.begin(); it != entries.end(); ++it) {
        const Cell from = parse_cell(it.key(), domain.alphabet());
        if (!it.value().is_string())
            throw InputError("function image for '" + it.key() + "' must be a cell word");
        const Cell to = parse_cell(it.value().get<std::string>(), codomain.alphabet());
        table[from] = to;
    }
    return CellFunction::table(std::move(domain), std::move(codomain), k_max, std::move(table));
}

std::string save_function(const CellFunction& f) { return function_to_json(f).dump(2) + "\n"; }

CellFunction parse_function(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("function file is not valid JSON: ") + e.what());
    }
    return function_from_json(j);
}

CellFunction load_function(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open function file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_function(buffer.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

} // namespace continuum
