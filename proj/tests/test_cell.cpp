#include <doctest.h>

#include <algorithm>

#include "continuum/cell.hpp"
#include "continuum/error.hpp"

using namespace continuum;

namespace {

const Alphabet ab2({"a", "b"});
const Alphabet ab4({"a", "b", "c", "d"});

Cell c(const char* text, const Alphabet& ab = ab2) { return parse_cell(text, ab); }

std::vector<Cell> all_cells_up_to(const Alphabet& ab, int max_depth) {
    std::vector<Cell> out;
    for (int k = 0; k <= max_depth; ++k) {
        const std::uint64_t n = cell_count(ab.size(), k);
        for (std::uint64_t i = 0; i < n; ++i)
            out.push_back(index_cell(i, ab.size(), k));
    }
    return out;
}

} // namespace

TEST_CASE("suc appends a symbol") {
    CHECK(suc(Cell::unit(), 0, ab2) == c("a"));
    CHECK(suc(c("a.b"), 0, ab2) == c("a.b.a"));
    CHECK(suc(c("b"), 1, ab2) == c("b.b"));
    CHECK_THROWS_AS(suc(c("a"), 5, ab2), InputError);
}

TEST_CASE("pred drops the last symbol and fixes the unit") {
    CHECK(pred(c("a.b")) == c("a"));
    CHECK(pred(Cell::unit()) == Cell::unit());
    CHECK(pred(c("b.a.a")) == c("b.a"));
}

TEST_CASE("top is the last symbol, with the unit marked") {
    CHECK(top(c("a.b")) == SymbolId{1});
    CHECK(top(Cell::unit()) == std::nullopt);
    CHECK(top(c("b.a.a")) == SymbolId{0});
}

TEST_CASE("length counts the unit") {
    CHECK(length(Cell::unit()) == 1);
    CHECK(length(c("a.b")) == 3);
    CHECK(c("a.b").depth() == 2);
    CHECK(length(c("a")) == 2);
}

TEST_CASE("prefix relation on the stated pairs") {
    CHECK(prefix_relation(c("a"), c("a.b")) == PrefixRelation::Ancestor);
    CHECK(prefix_relation(c("a.b"), c("a.b")) == PrefixRelation::Equal);
    CHECK(prefix_relation(c("a.b"), c("b.a")) == PrefixRelation::Incomparable);
    CHECK(prefix_relation(c("a.b"), c("a")) == PrefixRelation::Descendant);
    CHECK_THROWS_AS(prefix_relation(c("a"), Cell(std::vector<SymbolId>{7}), ab2), InputError);
}

TEST_CASE("prefix relation is complete and mutually exclusive") {
    const auto cells = all_cells_up_to(ab2, 4);
    for (const Cell& x : cells)
        for (const Cell& y : cells) {
            const auto rel = prefix_relation(x, y);
            const bool eq = x == y;
            const bool anc = !eq && x.depth() < y.depth() && y.prefix(x.depth()) == x;
            const bool desc = !eq && y.depth() < x.depth() && x.prefix(y.depth()) == y;
            int holds = 0;
            holds += rel == PrefixRelation::Equal;
            holds += rel == PrefixRelation::Ancestor;
            holds += rel == PrefixRelation::Descendant;
            holds += rel == PrefixRelation::Incomparable;
            CHECK(holds == 1);
            CHECK((rel == PrefixRelation::Equal) == eq);
            CHECK((rel == PrefixRelation::Ancestor) == anc);
            CHECK((rel == PrefixRelation::Descendant) == desc);
        }
}

TEST_CASE("ancestor-or-equal is a partial order") {
    const auto cells = all_cells_up_to(ab2, 4);
    auto leq = [](const Cell& x, const Cell& y) {
        const auto rel = prefix_relation(x, y);
        return rel == PrefixRelation::Equal || rel == PrefixRelation::Ancestor;
    };
    for (const Cell& x : cells) {
        CHECK(leq(x, x));
        for (const Cell& y : cells) {
            if (leq(x, y) && leq(y, x))
                CHECK(x == y);
            for (const Cell& z : cells)
                if (leq(x, y) && leq(y, z))
                    CHECK(leq(x, z));
        }
    }
}

TEST_CASE("pred inverts suc") {
    for (const Cell& x : all_cells_up_to(ab4, 3))
        for (SymbolId s = 0; s < 4; ++s)
            CHECK(pred(suc(x, s, ab4)) == x);
}

TEST_CASE("lexicographic comparison follows the alphabet order") {
    CHECK(lex_compare(c("a.b"), c("b.a")) == std::strong_ordering::less);
    CHECK(lex_compare(c("a.b"), c("a.b")) == std::strong_ordering::equal);
    CHECK(lex_compare(c("c.d", ab4), c("d.a", ab4)) == std::strong_ordering::less);
}

TEST_CASE("lexicographic order is total on each fixed depth") {
    for (int k = 1; k <= 4; ++k) {
        const std::uint64_t n = cell_count(2, k);
        for (std::uint64_t i = 0; i < n; ++i)
            for (std::uint64_t j = 0; j < n; ++j) {
                const auto cmp = lex_compare(index_cell(i, 2, k), index_cell(j, 2, k));
                if (i < j)
                    CHECK(cmp == std::strong_ordering::less);
                else if (i == j)
                    CHECK(cmp == std::strong_ordering::equal);
                else
                    CHECK(cmp == std::strong_ordering::greater);
            }
    }
}

TEST_CASE("parse and format round-trip") {
    CHECK(c("a.b.b") == Cell(std::vector<SymbolId>{0, 1, 1}));
    CHECK(parse_cell("", ab2) == Cell::unit());
    CHECK_THROWS_AS(parse_cell("a.z", ab2), InputError);
    for (const Cell& x : all_cells_up_to(ab4, 4))
        CHECK(parse_cell(format_cell(x, ab4), ab4) == x);
}

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet({"a", "a"}), InputError);
    CHECK_THROWS_AS(Alphabet({"a", "b.c"}), InputError);
    CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), InputError);
    CHECK(ab4.find("c") == SymbolId{2});
    CHECK(ab4.find("z") == std::nullopt);
}

TEST_CASE("cell index round-trip at fixed depth") {
    for (int k = 0; k <= 4; ++k) {
        const std::uint64_t n = cell_count(3, k);
        for (std::uint64_t i = 0; i < n; ++i)
            CHECK(cell_index(index_cell(i, 3, k), 3) == i);
    }
}
