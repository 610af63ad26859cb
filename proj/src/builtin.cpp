#include "continuum/builtin.hpp"

#include <algorithm>
#include <array>

#include "continuum/analysis.hpp"
#include "continuum/error.hpp"

namespace continuum {

namespace {

std::vector<std::string> letter_names(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (count <= 26)
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            names.push_back("s" + std::to_string(i));
    }
    return names;
}

// Positions of the carpet symbols in the 3x3 parent grid (center removed),
// row-major from the bottom row. Symbol ids follow this order, which keeps
// the lexicographic order of cells aligned with the geometric order.
constexpr std::array<std::pair<int, int>, 8> kCarpetPos = {{
    {0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2},
}};

std::optional<SymbolId> carpet_symbol(int col, int row) {
    for (std::size_t i = 0; i < kCarpetPos.size(); ++i)
        if (kCarpetPos[i] == std::pair<int, int>{col, row})
            return static_cast<SymbolId>(i);
    return std::nullopt;
}

std::uint64_t repeated_symbol_index(SymbolId s, std::size_t l, int depth) {
    std::uint64_t idx = 0;
    for (int i = 0; i < depth; ++i)
        idx = idx * l + s;
    return idx;
}

// Depth-k words over a two-symbol subalphabet {lo, hi}, in lexicographic
// order of the full pattern (lo < hi assumed).
std::vector<std::uint64_t> two_symbol_words(SymbolId lo, SymbolId hi, std::size_t l, int depth) {
    const std::uint64_t count = std::uint64_t{1} << depth;
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        std::uint64_t idx = 0;
        for (int i = depth - 1; i >= 0; --i)
            idx = idx * l + ((bits >> i) & 1 ? hi : lo);
        out.push_back(idx);
    }
    return out;
}

} // namespace

AdjacencyPattern euclid(int n) {
    if (n < 1)
        throw InputError("euclid dimension must be at least 1");
    if (n > 7)
        throw InputError("euclid dimension above 7 is not supported");
    const std::size_t l = std::size_t{1} << n;
    Alphabet alphabet(letter_names(l));

    std::vector<SymbolPair> base;
    for (std::size_t s = 0; s < l; ++s)
        for (int j = 0; j < n; ++j) {
            const std::size_t t = s ^ (std::size_t{1} << j);
            if (s < t)
                base.push_back({static_cast<SymbolId>(s), static_cast<SymbolId>(t)});
        }

    // Contact along axis j: the lexicographically smaller cell sits on the
    // lower side, so its children on the upper face of axis j meet the
    // other cell's children on the lower face, coordinates on all other
    // axes matching.
    MRuleMap rules;
    for (std::size_t s = 0; s < l; ++s)
        for (int j = 0; j < n; ++j) {
            const std::size_t t = s ^ (std::size_t{1} << j);
            std::vector<SymbolPair> children;
            for (std::size_t w = 0; w < l; ++w) {
                if (w & (std::size_t{1} << j))
                    continue;
                children.push_back({static_cast<SymbolId>(w | (std::size_t{1} << j)),
                                    static_cast<SymbolId>(w)});
            }
            rules[{static_cast<SymbolId>(s), static_cast<SymbolId>(t)}] = std::move(children);
        }

    return AdjacencyPattern("euclid" + std::to_string(n),
                            DPattern(std::move(alphabet), std::move(base)), std::move(rules));
}

AdjacencyPattern sierpinski_triangle() {
    Alphabet alphabet({"1", "2", "3"});
    std::vector<SymbolPair> base = {{0, 1}, {0, 2}, {1, 2}};
    // Siblings i < j touch at the corner opposite to the remaining symbol m;
    // from there the contact chain keeps the constant suffix m.m...m.
    MRuleMap rules = {
        {{0, 1}, {{2, 2}}}, {{0, 2}, {{1, 1}}}, {{1, 2}, {{0, 0}}},
        {{0, 0}, {{0, 0}}}, {{1, 1}, {{1, 1}}}, {{2, 2}, {{2, 2}}},
    };
    return AdjacencyPattern("sierpinski_triangle", DPattern(std::move(alphabet), std::move(base)),
                            std::move(rules));
}

AdjacencyPattern sierpinski_carpet() {
    std::vector<std::string> names;
    for (int i = 1; i <= 8; ++i)
        names.push_back(std::to_string(i));
    Alphabet alphabet(std::move(names));

    std::vector<SymbolPair> base;
    for (std::size_t s = 0; s < 8; ++s)
        for (std::size_t t = s + 1; t < 8; ++t) {
            const auto [cs, rs] = kCarpetPos[s];
            const auto [ct, rt] = kCarpetPos[t];
            if (std::abs(cs - ct) + std::abs(rs - rt) == 1)
                base.push_back({static_cast<SymbolId>(s), static_cast<SymbolId>(t)});
        }

    // Child pairs for a horizontal contact (smaller cell on the left): the
    // right column of the left cell against the left column of the right
    // cell, rows matching. Vertical contacts are the transpose.
    std::vector<SymbolPair> horizontal, vertical;
    for (int r = 0; r < 3; ++r)
        horizontal.push_back({*carpet_symbol(2, r), *carpet_symbol(0, r)});
    for (int c = 0; c < 3; ++c)
        vertical.push_back({*carpet_symbol(c, 2), *carpet_symbol(c, 0)});

    MRuleMap rules;
    for (std::size_t s = 0; s < 8; ++s)
        for (std::size_t t = 0; t < 8; ++t) {
            if (s == t)
                continue;
            const auto [cs, rs] = kCarpetPos[s];
            const auto [ct, rt] = kCarpetPos[t];
            const SymbolPair key{static_cast<SymbolId>(s), static_cast<SymbolId>(t)};
            if (rs == rt && (ct == cs + 1 || (cs == 2 && ct == 0)))
                rules[key] = horizontal; // siblings side by side, or across parents
            else if (cs == ct && (rt == rs + 1 || (rs == 2 && rt == 0)))
                rules[key] = vertical;
        }

    return AdjacencyPattern("sierpinski_carpet", DPattern(std::move(alphabet), std::move(base)),
                            std::move(rules));
}

std::optional<int> euclid_dimension(const AdjacencyPattern& pattern) {
    const std::size_t l = pattern.alphabet_size();
    int n = 0;
    while ((std::size_t{1} << n) < l)
        ++n;
    if ((std::size_t{1} << n) != l || n < 1 || n > 7)
        return std::nullopt;
    const AdjacencyPattern reference = euclid(n);
    if (pattern.d().adjacency() != reference.d().adjacency())
        return std::nullopt;
    if (pattern.m_rules() != reference.m_rules())
        return std::nullopt;
    if (!pattern.sibling_extras().empty())
        return std::nullopt;
    return n;
}

AdjacencyPattern glue(const AdjacencyPattern& base, BorderGluing gluing) {
    if (gluing.kind == GluingKind::None)
        return base.with_gluing(gluing, base.name());
    const auto n = euclid_dimension(base);
    if (!n)
        throw InputError("gluings are defined for the euclid patterns only");
    if ((gluing.kind == GluingKind::Moebius || gluing.kind == GluingKind::Klein) && *n != 2)
        throw InputError(std::string(gluing_kind_name(gluing.kind)) +
                         " gluing requires the 2-dimensional pattern");
    if (!base.alphabet().contains(gluing.corner))
        throw InputError("gluing corner symbol outside the alphabet");
    return base.with_gluing(gluing,
                            base.name() + "+" + gluing_kind_name(gluing.kind));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> gluing_edges(const AdjacencyPattern& pattern,
                                                                  int depth) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (!pattern.has_gluing())
        return out;
    const BorderGluing& g = pattern.gluing();
    const std::size_t l = pattern.alphabet_size();
    const auto n = euclid_dimension(pattern);
    if (!n)
        throw UnsupportedPatternError("gluing on a non-euclid pattern");

    auto add = [&out](std::uint64_t a, std::uint64_t b) {
        if (a == b)
            return;
        if (a > b)
            std::swap(a, b);
        out.push_back({a, b});
    };

    switch (g.kind) {
    case GluingKind::None:
        break;
    case GluingKind::SphereCorner: {
        // The fixed corner becomes adjacent to every other border object.
        const BorderClassifier classifier(pattern.d(), *n);
        const std::uint64_t corner = repeated_symbol_index(g.corner, l, depth);
        const std::uint64_t count = cell_count(l, depth);
        for (std::uint64_t i = 0; i < count; ++i) {
            if (i == corner)
                continue;
            if (classifier.is_border(index_cell(i, l, depth)))
                add(corner, i);
        }
        break;
    }
    case GluingKind::TorusOpposite: {
        // Cells on the lower face of an axis meet the cell with that
        // coordinate flipped in every symbol.
        const std::uint64_t count = cell_count(l, depth);
        for (int axis = 0; axis < *n; ++axis) {
            const SymbolId bit = static_cast<SymbolId>(1u << axis);
            for (std::uint64_t i = 0; i < count; ++i) {
                const Cell c = index_cell(i, l, depth);
                bool lower_face = true;
                for (SymbolId s : c.word())
                    if (s & bit) {
                        lower_face = false;
                        break;
                    }
                if (!lower_face)
                    continue;
                std::uint64_t partner = 0;
                for (SymbolId s : c.word())
                    partner = partner * l + (s | bit);
                add(i, partner);
            }
        }
        break;
    }
    case GluingKind::Moebius:
    case GluingKind::Klein: {
        // Bottom edge against the reversed top edge.
        const auto b_ab = two_symbol_words(0, 1, l, depth);
        const auto b_cd = two_symbol_words(2, 3, l, depth);
        for (std::size_t i = 0; i < b_ab.size(); ++i)
            add(b_ab[i], b_cd[b_cd.size() - 1 - i]);
        if (g.kind == GluingKind::Klein) {
            // Plus the fixed corner against both vertical edges.
            const std::uint64_t corner = repeated_symbol_index(g.corner, l, depth);
            for (std::uint64_t x : two_symbol_words(0, 2, l, depth))
                add(corner, x);
            for (std::uint64_t x : two_symbol_words(1, 3, l, depth))
                add(corner, x);
        }
        break;
    }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<AdjacencyPattern> builtin_pattern(const std::string& name) {
    if (name == "euclid1")
        return euclid(1);
    if (name == "euclid2")
        return euclid(2);
    if (name == "euclid3")
        return euclid(3);
    if (name == "euclid4")
        return euclid(4);
    if (name == "sierpinski_triangle" || name == "triangle")
        return sierpinski_triangle();
    if (name == "sierpinski_carpet" || name == "carpet")
        return sierpinski_carpet();
    if (name == "circle") {
        auto p = glue(euclid(1), {GluingKind::SphereCorner, 0});
        return p.with_gluing(p.gluing(), "circle");
    }
    if (name == "sphere2") {
        auto p = glue(euclid(2), {GluingKind::SphereCorner, 0});
        return p.with_gluing(p.gluing(), "sphere2");
    }
    if (name == "torus2") {
        auto p = glue(euclid(2), {GluingKind::TorusOpposite, 0});
        return p.with_gluing(p.gluing(), "torus2");
    }
    if (name == "moebius") {
        auto p = glue(euclid(2), {GluingKind::Moebius, 0});
        return p.with_gluing(p.gluing(), "moebius");
    }
    if (name == "klein") {
        auto p = glue(euclid(2), {GluingKind::Klein, 0});
        return p.with_gluing(p.gluing(), "klein");
    }
    return std::nullopt;
}

std::vector<std::string> builtin_pattern_names() {
    return {"euclid1", "euclid2",  "euclid3", "euclid4", "sierpinski_triangle",
            "sierpinski_carpet", "circle",  "sphere2", "torus2",  "moebius", "klein"};
}

} // namespace continuum
