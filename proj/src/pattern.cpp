#include "continuum/pattern.hpp"

#include <algorithm>
#include <queue>

#include "continuum/error.hpp"

namespace continuum {

namespace {

std::vector<SymbolPair> canonical_pairs(std::vector<SymbolPair> pairs, std::size_t l,
                                        const char* what) {
    for (auto& [s, t] : pairs) {
        if (s >= l || t >= l)
            throw InputError(std::string(what) + " refers to a symbol outside the alphabet");
        if (s == t)
            throw InputError(std::string(what) + " must be irreflexive");
        if (s > t)
            std::swap(s, t);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

} // namespace

DPattern::DPattern(Alphabet alphabet, std::vector<SymbolPair> adjacency)
    : alphabet_(std::move(alphabet)),
      adjacency_(canonical_pairs(std::move(adjacency), alphabet_.size(), "base adjacency")) {
    // Connectivity: uniting all adjacent parts must give back the unit.
    const std::size_t l = alphabet_.size();
    std::vector<char> seen(l, 0);
    std::queue<SymbolId> queue;
    queue.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        SymbolId v = queue.front();
        queue.pop();
        for (const auto& [s, t] : adjacency_) {
            SymbolId other;
            if (s == v)
                other = t;
            else if (t == v)
                other = s;
            else
                continue;
            if (!seen[other]) {
                seen[other] = 1;
                ++reached;
                queue.push(other);
            }
        }
    }
    if (reached != l)
        throw InputError("base adjacency graph is not connected");
}

bool DPattern::adjacent(SymbolId s, SymbolId t) const {
    if (s > t)
        std::swap(s, t);
    return std::binary_search(adjacency_.begin(), adjacency_.end(), SymbolPair{s, t});
}

int DPattern::degree(SymbolId v) const {
    int d = 0;
    for (const auto& [s, t] : adjacency_)
        if (s == v || t == v)
            ++d;
    return d;
}

bool DPattern::regular() const {
    if (alphabet_.size() == 0)
        return false;
    const int d0 = degree(0);
    for (std::size_t v = 1; v < alphabet_.size(); ++v)
        if (degree(static_cast<SymbolId>(v)) != d0)
            return false;
    return true;
}

AdjacencyPattern::AdjacencyPattern(std::string name, DPattern d, MRuleMap m_rules,
                                   std::vector<SymbolPair> sibling_extras, BorderGluing gluing)
    : name_(std::move(name)), d_(std::move(d)), m_rules_(std::move(m_rules)),
      sibling_extras_(canonical_pairs(std::move(sibling_extras), d_.size(), "sibling extras")),
      gluing_(gluing) {
    const std::size_t l = d_.size();
    for (auto& [key, children] : m_rules_) {
        if (key.first >= l || key.second >= l)
            throw InputError("merge rule key refers to a symbol outside the alphabet");
        if (children.empty())
            throw InputError("merge rule for (" + alphabet().name(key.first) + ", " +
                             alphabet().name(key.second) + ") has no child pairs");
        for (const auto& [u, v] : children)
            if (u >= l || v >= l)
                throw InputError("merge rule child refers to a symbol outside the alphabet");
        std::sort(children.begin(), children.end());
        children.erase(std::unique(children.begin(), children.end()), children.end());
    }
    if (gluing_.kind != GluingKind::None && !alphabet().contains(gluing_.corner))
        throw InputError("gluing corner symbol outside the alphabet");
}

const std::vector<SymbolPair>* AdjacencyPattern::rule(SymbolId s, SymbolId t) const {
    auto it = m_rules_.find({s, t});
    return it == m_rules_.end() ? nullptr : &it->second;
}

AdjacencyPattern AdjacencyPattern::with_gluing(BorderGluing g, std::string name) const {
    return AdjacencyPattern(std::move(name), d_, m_rules_, sibling_extras_, g);
}

const char* gluing_kind_name(GluingKind kind) {
    switch (kind) {
    case GluingKind::None: return "none";
    case GluingKind::SphereCorner: return "sphere_corner";
    case GluingKind::TorusOpposite: return "torus_opposite";
    case GluingKind::Moebius: return "moebius";
    case GluingKind::Klein: return "klein";
    }
    return "none";
}

std::optional<GluingKind> gluing_kind_from_name(std::string_view name) {
    for (GluingKind k : {GluingKind::None, GluingKind::SphereCorner, GluingKind::TorusOpposite,
                         GluingKind::Moebius, GluingKind::Klein})
        if (name == gluing_kind_name(k))
            return k;
    return std::nullopt;
}

} // namespace continuum
