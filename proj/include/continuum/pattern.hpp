#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "continuum/cell.hpp"

namespace continuum {

using SymbolPair = std::pair<SymbolId, SymbolId>;

/// Division pattern: the alphabet of parts together with the base adjacency
/// graph on them. The graph must be connected, so uniting all adjacent
/// parts gives back the unit.
class DPattern {
public:
    DPattern() = default;
    DPattern(Alphabet alphabet, std::vector<SymbolPair> adjacency);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return alphabet_.size(); }

    /// Unordered base pairs, stored with the smaller id first, sorted.
    const std::vector<SymbolPair>& adjacency() const { return adjacency_; }
    bool adjacent(SymbolId s, SymbolId t) const;

    /// Degree of a symbol in the base graph.
    int degree(SymbolId s) const;
    /// True when every symbol has the same degree.
    bool regular() const;

    bool operator==(const DPattern&) const = default;

private:
    Alphabet alphabet_;
    std::vector<SymbolPair> adjacency_;
};

/// Merge rule: when two adjacent cells with top symbols (key.first on the
/// lexicographically smaller word, key.second on the larger) divide, the
/// listed child pairs become adjacent, each pair extending smaller and
/// larger side respectively.
struct MRule {
    SymbolPair key;
    std::vector<SymbolPair> children; // nonempty, sorted
};

using MRuleMap = std::map<SymbolPair, std::vector<SymbolPair>>;

enum class GluingKind { None, SphereCorner, TorusOpposite, Moebius, Klein };

/// Extra border identifications applied at every depth on top of the
/// pattern-generated adjacency.
struct BorderGluing {
    GluingKind kind = GluingKind::None;
    /// Fixed corner symbol for SphereCorner and Klein.
    SymbolId corner = 0;

    bool operator==(const BorderGluing&) const = default;
};

/// A complete adjacency pattern: division pattern, merge rules, optional
/// extra sibling adjacency, optional border gluing. Fully determines the
/// adjacency graph on the cells of every depth.
class AdjacencyPattern {
public:
    AdjacencyPattern() = default;
    AdjacencyPattern(std::string name, DPattern d, MRuleMap m_rules,
                     std::vector<SymbolPair> sibling_extras = {},
                     BorderGluing gluing = {});

    const std::string& name() const { return name_; }
    const DPattern& d() const { return d_; }
    const Alphabet& alphabet() const { return d_.alphabet(); }
    std::size_t alphabet_size() const { return d_.size(); }
    const MRuleMap& m_rules() const { return m_rules_; }

    /// Children of the rule keyed by the ordered top pair, or nullptr.
    const std::vector<SymbolPair>* rule(SymbolId s, SymbolId t) const;

    /// Pairs adjacent under a common parent at depth >= 2: the base
    /// adjacency plus any declared extras. Normally equals the base.
    const std::vector<SymbolPair>& sibling_extras() const { return sibling_extras_; }

    const BorderGluing& gluing() const { return gluing_; }
    bool has_gluing() const { return gluing_.kind != GluingKind::None; }

    /// Same pattern with a different gluing (used by the glue operation).
    AdjacencyPattern with_gluing(BorderGluing g, std::string name) const;

    bool operator==(const AdjacencyPattern&) const = default;

private:
    std::string name_;
    DPattern d_;
    MRuleMap m_rules_;
    std::vector<SymbolPair> sibling_extras_;
    BorderGluing gluing_;
};

const char* gluing_kind_name(GluingKind kind);
std::optional<GluingKind> gluing_kind_from_name(std::string_view name);

} // namespace continuum
