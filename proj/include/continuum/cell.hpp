#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace continuum {

using SymbolId = std::uint8_t;

/// Ordered collection of division symbols. The position of a name in the
/// list is the symbol id, and the list order induces the lexicographic
/// order on cells. Names within one alphabet are pairwise distinct.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(SymbolId id) const;
    const std::vector<std::string>& names() const { return names_; }

    /// Id of a symbol name, or nullopt if the name is not in the alphabet.
    std::optional<SymbolId> find(std::string_view name) const;
    bool contains(SymbolId id) const { return id < names_.size(); }

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> names_;
};

/// A cell is a finite word of symbol ids: the part of the unit reached by
/// dividing along the listed symbols, one division per symbol. The empty
/// word is the undivided unit itself.
class Cell {
public:
    Cell() = default;
    explicit Cell(std::vector<SymbolId> word) : word_(std::move(word)) {}

    /// The undivided unit (empty word).
    static Cell unit() { return Cell{}; }

    /// Number of divisions performed (word length).
    int depth() const { return static_cast<int>(word_.size()); }
    bool is_unit() const { return word_.empty(); }

    SymbolId operator[](int i) const { return word_[static_cast<std::size_t>(i)]; }
    const std::vector<SymbolId>& word() const { return word_; }

    /// The first `len` symbols as a cell. `len` must not exceed depth().
    Cell prefix(int len) const;

    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;

private:
    std::vector<SymbolId> word_;
};

enum class PrefixRelation { Equal, Ancestor, Descendant, Incomparable };

/// Appends symbol `a` to `c`. The symbol must belong to `alphabet`.
Cell suc(const Cell& c, SymbolId a, const Alphabet& alphabet);

/// Drops the last symbol. The unit is its own predecessor.
Cell pred(const Cell& c);

/// Last symbol of the word; nullopt marks the unit.
std::optional<SymbolId> top(const Cell& c);

/// Length in the convention that counts the unit: depth + 1.
int length(const Cell& c);

/// Exactly one of Equal / Ancestor (x a proper prefix of y) / Descendant
/// (y a proper prefix of x) / Incomparable holds for any pair.
PrefixRelation prefix_relation(const Cell& x, const Cell& y);

/// As above, but first validates that both cells are words over `alphabet`.
PrefixRelation prefix_relation(const Cell& x, const Cell& y, const Alphabet& alphabet);

/// Lexicographic comparison in the alphabet order; on words of equal depth
/// this is a total order. A proper prefix precedes its extensions.
std::strong_ordering lex_compare(const Cell& x, const Cell& y);

/// Parses dot notation ("a.b.b"); the empty string denotes the unit.
Cell parse_cell(std::string_view text, const Alphabet& alphabet);

/// Formats as dot notation; the unit formats as the empty string.
std::string format_cell(const Cell& c, const Alphabet& alphabet);

/// Rank of a depth-k cell among all depth-k cells in lexicographic order,
/// i.e. the word read as a base-|alphabet| number (most significant first).
std::uint64_t cell_index(const Cell& c, std::size_t alphabet_size);

/// Inverse of cell_index at a fixed depth.
Cell index_cell(std::uint64_t index, std::size_t alphabet_size, int depth);

/// alphabet_size^depth, guarding against overflow.
std::uint64_t cell_count(std::size_t alphabet_size, int depth);

} // namespace continuum
