#include "continuum/function.hpp"

#include <algorithm>

#include "continuum/error.hpp"

namespace continuum {

namespace {

bool adjacent_or_equal(const AdjacencyPattern& pattern, const Cell& a, const Cell& b) {
    if (a == b)
        return true;
    return adjacent_general(pattern, a, b);
}

} // namespace

CellFunction::CellFunction(Kind kind, std::string name, AdjacencyPattern domain,
                           AdjacencyPattern codomain, int k_max, std::map<Cell, Cell> table)
    : kind_(kind), name_(std::move(name)), domain_(std::move(domain)),
      codomain_(std::move(codomain)), k_max_(k_max), table_(std::move(table)) {
    if (k_max_ < 1)
        throw InputError("function depth bound must be at least 1");
}

CellFunction CellFunction::identity(AdjacencyPattern pattern, int k_max) {
    auto copy = pattern;
    return CellFunction(Kind::Identity, "identity", std::move(copy), std::move(pattern), k_max);
}

CellFunction CellFunction::head_const(AdjacencyPattern pattern, int k_max) {
    auto copy = pattern;
    return CellFunction(Kind::HeadConst, "head_const", std::move(copy), std::move(pattern), k_max);
}

CellFunction CellFunction::reverse(AdjacencyPattern pattern, int k_max) {
    auto copy = pattern;
    return CellFunction(Kind::Reverse, "reverse", std::move(copy), std::move(pattern), k_max);
}

CellFunction CellFunction::table(AdjacencyPattern domain, AdjacencyPattern codomain, int k_max,
                                 std::map<Cell, Cell> map) {
    CellFunction f(Kind::Table, "table", std::move(domain), std::move(codomain), k_max,
                   std::move(map));
    // Totality: every domain cell up to k_max must have an image over the
    // codomain alphabet.
    const std::size_t l = f.domain_.alphabet_size();
    for (int k = 0; k <= k_max; ++k) {
        const std::uint64_t count = cell_count(l, k);
        for (std::uint64_t i = 0; i < count; ++i) {
            auto it = f.table_.find(index_cell(i, l, k));
            if (it == f.table_.end())
                throw InputError("function table is missing the cell '" +
                                 format_cell(index_cell(i, l, k), f.domain_.alphabet()) + "'");
            for (SymbolId s : it->second.word())
                if (!f.codomain_.alphabet().contains(s))
                    throw InputError("function table image outside the codomain alphabet");
        }
    }
    return f;
}

std::optional<CellFunction> CellFunction::builtin(const std::string& name,
                                                  AdjacencyPattern pattern, int k_max) {
    if (name == "identity")
        return identity(std::move(pattern), k_max);
    if (name == "head_const")
        return head_const(std::move(pattern), k_max);
    if (name == "reverse")
        return reverse(std::move(pattern), k_max);
    return std::nullopt;
}

Cell CellFunction::operator()(const Cell& c) const {
    if (c.depth() > k_max_)
        throw InputError("cell depth exceeds the function's depth bound");
    switch (kind_) {
    case Kind::Identity:
        return c;
    case Kind::HeadConst: {
        if (c.is_unit())
            return c;
        return Cell(std::vector<SymbolId>(static_cast<std::size_t>(c.depth()), c[0]));
    }
    case Kind::Reverse: {
        const auto l = static_cast<SymbolId>(domain_.alphabet_size());
        std::vector<SymbolId> word = c.word();
        for (auto& s : word)
            s = static_cast<SymbolId>(l - 1 - s);
        return Cell(std::move(word));
    }
    case Kind::Table: {
        auto it = table_.find(c);
        if (it == table_.end())
            throw InputError("cell not in function table");
        return it->second;
    }
    }
    return c;
}

FunctionReport is_monotonic(const CellFunction& f, int depth) {
    if (depth > f.k_max())
        throw InputError("check depth exceeds the function's depth bound");
    FunctionReport report;
    report.property = "monotonic";
    report.pass = true;
    const std::size_t l = f.domain().alphabet_size();
    // Immediate extensions suffice: prefix-or-equal composes along chains.
    for (int k = 0; k < depth; ++k) {
        const std::uint64_t count = cell_count(l, k);
        for (std::uint64_t i = 0; i < count; ++i) {
            const Cell x = index_cell(i, l, k);
            const Cell fx = f(x);
            for (std::size_t s = 0; s < l; ++s) {
                const Cell y = suc(x, static_cast<SymbolId>(s), f.domain().alphabet());
                const auto rel = prefix_relation(fx, f(y));
                if (rel != PrefixRelation::Equal && rel != PrefixRelation::Ancestor) {
                    report.pass = false;
                    report.violations.push_back({x, y});
                }
            }
        }
    }
    return report;
}

FunctionReport is_strict(const CellFunction& f, int depth) {
    if (depth > f.k_max())
        throw InputError("check depth exceeds the function's depth bound");
    FunctionReport report;
    report.property = "strict";
    report.pass = true;
    const std::size_t l = f.domain().alphabet_size();
    for (int k = 0; k < depth; ++k) {
        const std::uint64_t count = cell_count(l, k);
        for (std::uint64_t i = 0; i < count; ++i) {
            const Cell x = index_cell(i, l, k);
            const Cell fx = f(x);
            // Breadth-first over descendants within the depth bound.
            bool witness = false;
            std::vector<Cell> frontier{x};
            for (int d = k; d < depth && !witness; ++d) {
                std::vector<Cell> next;
                for (const Cell& y : frontier)
                    for (std::size_t s = 0; s < l; ++s) {
                        Cell z = suc(y, static_cast<SymbolId>(s), f.domain().alphabet());
                        if (f(z) != fx) {
                            witness = true;
                            break;
                        }
                        next.push_back(std::move(z));
                    }
                frontier = std::move(next);
            }
            if (!witness) {
                report.pass = false;
                report.unverified.push_back(x);
            }
        }
    }
    if (!report.pass)
        report.detail = "no differing descendant within depth " + std::to_string(depth) +
                        " for " + std::to_string(report.unverified.size()) + " cell(s)";
    return report;
}

FunctionReport is_continuous(const CellFunction& f, int depth) {
    if (depth > f.k_max())
        throw InputError("check depth exceeds the function's depth bound");
    FunctionReport report;
    report.property = "continuous";
    report.pass = true;
    const auto levels = level_graphs(f.domain(), depth);
    for (const LevelGraph& g : levels) {
        for (const Edge& e : g.edges()) {
            const Cell x = g.cell(e.u);
            const Cell y = g.cell(e.v);
            if (!adjacent_or_equal(f.codomain(), f(x), f(y))) {
                report.pass = false;
                report.violations.push_back({x, y});
            }
        }
    }
    return report;
}

StreamPrefix stream_image(const CellFunction& f, const StreamPrefix& s) {
    if (!is_monotonic(f, s.depth()).pass)
        throw ContractError("stream_image requires a monotonic function");
    return f(s);
}

bool streams_equivalent(const AdjacencyPattern& pattern, const StreamPrefix& a,
                        const StreamPrefix& b) {
    if (a.depth() != b.depth())
        throw InputError("stream prefixes must have equal depth");
    const auto levels = level_graphs(pattern, a.depth());
    for (int j = 1; j <= a.depth(); ++j) {
        const Cell pa = a.prefix(j);
        const Cell pb = b.prefix(j);
        if (pa == pb)
            continue;
        const LevelGraph& g = levels[static_cast<std::size_t>(j - 1)];
        if (!g.has_edge(g.index(pa), g.index(pb)))
            return false;
    }
    return true;
}

std::optional<BrouwerWitness> brouwer_witness(const CellFunction& f, int depth) {
    if (!is_monotonic(f, depth).pass)
        throw ContractError("brouwer_witness requires a monotonic function");
    if (!is_strict(f, depth).pass)
        throw ContractError("brouwer_witness requires a strict function");

    const AdjacencyPattern& p = f.domain();
    const std::size_t l = p.alphabet_size();
    const auto levels = level_graphs(p, depth);
    for (const LevelGraph& g : levels) {
        for (const Edge& e : g.edges()) {
            const Cell x = g.cell(e.u);
            const Cell y = g.cell(e.v);
            if (adjacent_or_equal(f.codomain(), f(x), f(y)))
                continue;

            BrouwerWitness w;
            w.left = x;
            w.right = y;
            w.left_image = f(x);
            w.right_image = f(y);
            w.depth = depth;

            // Dive toward the shared boundary: extend the violating edge
            // level by level through the first child pair of its rule.
            std::uint64_t u = e.u, v = e.v;
            for (int k = g.depth(); k < depth; ++k) {
                const SymbolId s = static_cast<SymbolId>(u % l);
                const SymbolId t = static_cast<SymbolId>(v % l);
                const auto* children = p.rule(s, t);
                if (!children || children->empty())
                    throw ContractError("violating edge cannot be extended: no merge rule for (" +
                                        p.alphabet().name(s) + ", " + p.alphabet().name(t) + ")");
                u = u * l + children->front().first;
                v = v * l + children->front().second;
            }
            w.left_stream = index_cell(u, l, depth);
            w.right_stream = index_cell(v, l, depth);
            w.left_image_stream = f(w.left_stream);
            w.right_image_stream = f(w.right_stream);
            w.inputs_equivalent = streams_equivalent(p, w.left_stream, w.right_stream);
            if (w.left_image_stream.depth() == w.right_image_stream.depth()) {
                w.images_equivalent =
                    streams_equivalent(f.codomain(), w.left_image_stream, w.right_image_stream);
            } else {
                const int m = std::min(w.left_image_stream.depth(), w.right_image_stream.depth());
                w.images_equivalent = streams_equivalent(
                    f.codomain(), w.left_image_stream.prefix(m), w.right_image_stream.prefix(m));
            }
            return w;
        }
    }
    return std::nullopt;
}

} // namespace continuum
