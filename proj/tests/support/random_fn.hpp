#pragma once

// Seeded generator of depth-preserving monotone table functions: the image
// of a child extends the image of its parent by one random symbol. Such
// functions are monotonic and strict by construction; continuity varies
// with the seed.

#include <map>
#include <random>

#include "continuum/function.hpp"

namespace testsupport {

inline continuum::CellFunction random_monotone_function(const continuum::AdjacencyPattern& domain,
                                                        const continuum::AdjacencyPattern& codomain,
                                                        int k_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t dl = domain.alphabet_size();
    const std::size_t cl = codomain.alphabet_size();
    std::map<continuum::Cell, continuum::Cell> table;
    table[continuum::Cell::unit()] = continuum::Cell::unit();
    for (int k = 0; k < k_max; ++k) {
        const std::uint64_t count = continuum::cell_count(dl, k);
        for (std::uint64_t i = 0; i < count; ++i) {
            const continuum::Cell parent = continuum::index_cell(i, dl, k);
            const continuum::Cell image = table.at(parent);
            for (std::size_t s = 0; s < dl; ++s) {
                auto word = image.word();
                word.push_back(static_cast<continuum::SymbolId>(rng() % cl));
                table[continuum::suc(parent, static_cast<continuum::SymbolId>(s),
                                     domain.alphabet())] = continuum::Cell(std::move(word));
            }
        }
    }
    return continuum::CellFunction::table(domain, codomain, k_max, std::move(table));
}

} // namespace testsupport
