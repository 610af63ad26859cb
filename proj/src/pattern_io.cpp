#include "continuum/pattern_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "continuum/builtin.hpp"
#include "continuum/error.hpp"

namespace continuum {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void reject_unknown_fields(const json& j, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.contains(it.key()))
            throw InputError("unknown field '" + it.key() + "' in " + where);
}

json require(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key))
        throw InputError("missing field '" + key + "' in " + where);
    return j.at(key);
}

SymbolId symbol_from_json(const json& j, const Alphabet& alphabet, const std::string& where) {
    if (!j.is_string())
        throw InputError("expected a symbol name in " + where);
    const auto id = alphabet.find(j.get<std::string>());
    if (!id)
        throw InputError("unknown symbol '" + j.get<std::string>() + "' in " + where);
    return *id;
}

std::vector<SymbolPair> pairs_from_json(const json& j, const Alphabet& alphabet,
                                        const std::string& where) {
    if (!j.is_array())
        throw InputError(where + " must be an array of symbol pairs");
    std::vector<SymbolPair> out;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw InputError("each entry of " + where + " must be a pair of symbol names");
        out.push_back({symbol_from_json(entry[0], alphabet, where),
                       symbol_from_json(entry[1], alphabet, where)});
    }
    return out;
}

ordered_json pairs_to_json(const std::vector<SymbolPair>& pairs, const Alphabet& alphabet) {
    ordered_json out = ordered_json::array();
    for (const auto& [s, t] : pairs)
        out.push_back({alphabet.name(s), alphabet.name(t)});
    return out;
}

} // namespace

ordered_json pattern_to_json(const AdjacencyPattern& pattern) {
    const Alphabet& ab = pattern.alphabet();
    ordered_json j;
    j["name"] = pattern.name();
    j["alphabet"] = ab.names();
    j["adj_d"] = pairs_to_json(pattern.d().adjacency(), ab);
    ordered_json rules = ordered_json::array();
    for (const auto& [key, children] : pattern.m_rules()) {
        ordered_json rule;
        rule["key"] = {ab.name(key.first), ab.name(key.second)};
        rule["children"] = pairs_to_json(children, ab);
        rules.push_back(std::move(rule));
    }
    j["m_rules"] = std::move(rules);
    if (!pattern.sibling_extras().empty())
        j["sibling_extras"] = pairs_to_json(pattern.sibling_extras(), ab);
    if (pattern.has_gluing()) {
        ordered_json g;
        g["kind"] = gluing_kind_name(pattern.gluing().kind);
        if (pattern.gluing().kind == GluingKind::SphereCorner ||
            pattern.gluing().kind == GluingKind::Klein)
            g["corner"] = ab.name(pattern.gluing().corner);
        j["gluing"] = std::move(g);
    }
    return j;
}

AdjacencyPattern pattern_from_json(const json& j) {
    if (!j.is_object())
        throw InputError("pattern definition must be an object");
    reject_unknown_fields(j, {"name", "alphabet", "adj_d", "m_rules", "sibling_extras", "gluing"},
                          "pattern definition");

    const auto name_json = require(j, "name", "pattern definition");
    if (!name_json.is_string())
        throw InputError("pattern 'name' must be a string");
    const auto alphabet_json = require(j, "alphabet", "pattern definition");
    if (!alphabet_json.is_array())
        throw InputError("pattern 'alphabet' must be an array of names");
    std::vector<std::string> names;
    for (const auto& n : alphabet_json) {
        if (!n.is_string())
            throw InputError("alphabet entries must be strings");
        names.push_back(n.get<std::string>());
    }
    Alphabet alphabet(std::move(names));

    DPattern d(alphabet, pairs_from_json(require(j, "adj_d", "pattern definition"), alphabet,
                                         "'adj_d'"));

    MRuleMap rules;
    const auto rules_json = require(j, "m_rules", "pattern definition");
    if (!rules_json.is_array())
        throw InputError("'m_rules' must be an array");
    for (const auto& rule : rules_json) {
        if (!rule.is_object())
            throw InputError("each merge rule must be an object");
        reject_unknown_fields(rule, {"key", "children"}, "merge rule");
        const auto key_json = require(rule, "key", "merge rule");
        if (!key_json.is_array() || key_json.size() != 2)
            throw InputError("merge rule 'key' must be a pair of symbol names");
        const SymbolPair key{symbol_from_json(key_json[0], alphabet, "merge rule key"),
                             symbol_from_json(key_json[1], alphabet, "merge rule key")};
        if (rules.contains(key))
            throw InputError("duplicate merge rule key");
        rules[key] = pairs_from_json(require(rule, "children", "merge rule"), alphabet,
                                     "merge rule children");
    }

    std::vector<SymbolPair> extras;
    if (j.contains("sibling_extras"))
        extras = pairs_from_json(j.at("sibling_extras"), alphabet, "'sibling_extras'");

    BorderGluing gluing;
    if (j.contains("gluing")) {
        const auto& g = j.at("gluing");
        if (!g.is_object())
            throw InputError("'gluing' must be an object");
        reject_unknown_fields(g, {"kind", "corner"}, "gluing");
        const auto kind_json = require(g, "kind", "gluing");
        if (!kind_json.is_string())
            throw InputError("gluing 'kind' must be a string");
        const auto kind = gluing_kind_from_name(kind_json.get<std::string>());
        if (!kind)
            throw InputError("unknown gluing kind '" + kind_json.get<std::string>() + "'");
        gluing.kind = *kind;
        if (g.contains("corner"))
            gluing.corner = symbol_from_json(g.at("corner"), alphabet, "gluing corner");
    }

    return AdjacencyPattern(name_json.get<std::string>(), std::move(d), std::move(rules),
                            std::move(extras), gluing);
}

std::string save_pattern(const AdjacencyPattern& pattern) {
    return pattern_to_json(pattern).dump(2) + "\n";
}

AdjacencyPattern parse_pattern(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("pattern file is not valid JSON: ") + e.what());
    }
    return pattern_from_json(j);
}

AdjacencyPattern load_pattern(const std::string& name_or_path) {
    if (auto builtin = builtin_pattern(name_or_path))
        return *builtin;
    std::ifstream in(name_or_path);
    if (!in)
        throw InputError("'" + name_or_path + "' is neither a built-in pattern nor a readable file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_pattern(buffer.str());
    } catch (const InputError& e) {
        throw InputError(name_or_path + ": " + e.what());
    }
}

AdjacencyPattern pattern_from_json_ref(const json& j) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (auto builtin = builtin_pattern(name))
            return *builtin;
        throw InputError("unknown built-in pattern '" + name + "'");
    }
    return pattern_from_json(j);
}

} // namespace continuum
