#include "continuum/cell.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "continuum/error.hpp"

namespace continuum {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw InputError("alphabet must not be empty");
    if (names_.size() > 256)
        throw InputError("alphabet too large (at most 256 symbols)");
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw InputError("symbol names must not be empty");
        if (n.find('.') != std::string::npos)
            throw InputError("symbol name '" + n + "' must not contain '.'");
        if (!seen.insert(n).second)
            throw InputError("duplicate symbol name '" + n + "'");
    }
}

const std::string& Alphabet::name(SymbolId id) const {
    if (!contains(id))
        throw InputError("symbol id " + std::to_string(id) + " out of range");
    return names_[id];
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<SymbolId>(i);
    return std::nullopt;
}

Cell Cell::prefix(int len) const {
    return Cell(std::vector<SymbolId>(word_.begin(), word_.begin() + len));
}

Cell suc(const Cell& c, SymbolId a, const Alphabet& alphabet) {
    if (!alphabet.contains(a))
        throw InputError("symbol id " + std::to_string(a) + " not in alphabet");
    auto word = c.word();
    word.push_back(a);
    return Cell(std::move(word));
}

Cell pred(const Cell& c) {
    if (c.is_unit())
        return c;
    auto word = c.word();
    word.pop_back();
    return Cell(std::move(word));
}

std::optional<SymbolId> top(const Cell& c) {
    if (c.is_unit())
        return std::nullopt;
    return c.word().back();
}

int length(const Cell& c) { return c.depth() + 1; }

PrefixRelation prefix_relation(const Cell& x, const Cell& y) {
    const auto& a = x.word();
    const auto& b = y.word();
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i)
        if (a[i] != b[i])
            return PrefixRelation::Incomparable;
    if (a.size() == b.size())
        return PrefixRelation::Equal;
    return a.size() < b.size() ? PrefixRelation::Ancestor : PrefixRelation::Descendant;
}

PrefixRelation prefix_relation(const Cell& x, const Cell& y, const Alphabet& alphabet) {
    for (const Cell* c : {&x, &y})
        for (SymbolId s : c->word())
            if (!alphabet.contains(s))
                throw InputError("cell contains symbol id " + std::to_string(s) +
                                 " outside the alphabet");
    return prefix_relation(x, y);
}

std::strong_ordering lex_compare(const Cell& x, const Cell& y) {
    return x.word() <=> y.word();
}

Cell parse_cell(std::string_view text, const Alphabet& alphabet) {
    std::vector<SymbolId> word;
    if (text.empty())
        return Cell{};
    std::size_t pos = 0;
    while (true) {
        std::size_t dot = text.find('.', pos);
        std::string_view part =
            dot == std::string_view::npos ? text.substr(pos) : text.substr(pos, dot - pos);
        auto id = alphabet.find(part);
        if (!id)
            throw InputError("unknown symbol '" + std::string(part) + "' in cell '" +
                             std::string(text) + "'");
        word.push_back(*id);
        if (dot == std::string_view::npos)
            break;
        pos = dot + 1;
    }
    return Cell(std::move(word));
}

std::string format_cell(const Cell& c, const Alphabet& alphabet) {
    std::string out;
    for (int i = 0; i < c.depth(); ++i) {
        if (i > 0)
            out += '.';
        out += alphabet.name(c[i]);
    }
    return out;
}

std::uint64_t cell_index(const Cell& c, std::size_t alphabet_size) {
    std::uint64_t idx = 0;
    for (SymbolId s : c.word()) {
        idx = idx * alphabet_size + s;
    }
    return idx;
}

Cell index_cell(std::uint64_t index, std::size_t alphabet_size, int depth) {
    std::vector<SymbolId> word(static_cast<std::size_t>(depth));
    for (int i = depth - 1; i >= 0; --i) {
        word[static_cast<std::size_t>(i)] = static_cast<SymbolId>(index % alphabet_size);
        index /= alphabet_size;
    }
    return Cell(std::move(word));
}

std::uint64_t cell_count(std::size_t alphabet_size, int depth) {
    std::uint64_t n = 1;
    for (int i = 0; i < depth; ++i) {
        if (n > std::numeric_limits<std::uint64_t>::max() / alphabet_size)
            throw InputError("cell count overflows at depth " + std::to_string(depth));
        n *= alphabet_size;
    }
    return n;
}

} // namespace continuum
