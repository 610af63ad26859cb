#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "continuum/level_graph.hpp"
#include "continuum/pattern.hpp"

namespace continuum {

/// A cell read as the first symbols of an infinite division sequence.
using StreamPrefix = Cell;

/// A total map from domain cells (up to a declared depth) to codomain
/// cells, given either as a finite table or as one of the built-in maps:
/// the identity, the head-constant map c -> (first symbol of c)^depth(c),
/// and the reversal map replacing every symbol by its complement in the
/// alphabet order.
class CellFunction {
public:
    static CellFunction identity(AdjacencyPattern pattern, int k_max = 32);
    static CellFunction head_const(AdjacencyPattern pattern, int k_max = 32);
    static CellFunction reverse(AdjacencyPattern pattern, int k_max = 32);
    static CellFunction table(AdjacencyPattern domain, AdjacencyPattern codomain, int k_max,
                              std::map<Cell, Cell> map);

    /// Built-in by name (identity, head_const, reverse) or nullopt.
    static std::optional<CellFunction> builtin(const std::string& name, AdjacencyPattern pattern,
                                               int k_max = 32);

    const AdjacencyPattern& domain() const { return domain_; }
    const AdjacencyPattern& codomain() const { return codomain_; }
    int k_max() const { return k_max_; }
    const std::string& name() const { return name_; }
    bool is_table() const { return kind_ == Kind::Table; }
    const std::map<Cell, Cell>& table_map() const { return table_; }

    /// Image of a cell; the cell's depth must not exceed k_max.
    Cell operator()(const Cell& c) const;

private:
    enum class Kind { Identity, HeadConst, Reverse, Table };
    CellFunction(Kind kind, std::string name, AdjacencyPattern domain, AdjacencyPattern codomain,
                 int k_max, std::map<Cell, Cell> table = {});

    Kind kind_;
    std::string name_;
    AdjacencyPattern domain_;
    AdjacencyPattern codomain_;
    int k_max_;
    std::map<Cell, Cell> table_;
};

/// Result of one of the function predicates. `violations` are offending
/// cell pairs; `unverified` are cells whose strictness witness would lie
/// beyond the checked depth (reported, never counted as passing).
struct FunctionReport {
    std::string property;
    bool pass = false;
    std::vector<std::pair<Cell, Cell>> violations;
    std::vector<Cell> unverified;
    std::string detail;
};

/// Monotonic: x a prefix of y implies f(x) a prefix of f(y) or equal.
FunctionReport is_monotonic(const CellFunction& f, int depth);

/// Strict: every cell has a descendant with a different image. Verified by
/// witness search within `depth`; witness-less cells make the check fail
/// and are listed as unverified at this depth.
FunctionReport is_strict(const CellFunction& f, int depth);

/// Continuous: adjacent cells have adjacent-or-equal images (general
/// cross-length adjacency on the codomain).
FunctionReport is_continuous(const CellFunction& f, int depth);

/// The image of a stream prefix: for a monotonic and strict function this
/// is the best currently determined prefix of the image stream, i.e. f(s).
/// Throws ContractError when f is not monotonic up to the prefix depth.
StreamPrefix stream_image(const CellFunction& f, const StreamPrefix& s);

/// Two equal-depth stream prefixes are equivalent when their length-j
/// prefixes are adjacent or equal at every level j.
bool streams_equivalent(const AdjacencyPattern& pattern, const StreamPrefix& a,
                        const StreamPrefix& b);

/// The executable content of the continuity theorem: an adjacent pair with
/// non-adjacent images, expanded into two equivalent input streams whose
/// image streams are not equivalent.
struct BrouwerWitness {
    Cell left, right;             // the violating adjacent pair
    Cell left_image, right_image; // their non-adjacent images
    int depth;                    // depth the streams were extended to
    StreamPrefix left_stream, right_stream;
    StreamPrefix left_image_stream, right_image_stream;
    bool inputs_equivalent;       // re-checked, expected true
    bool images_equivalent;       // re-checked, expected false
};

/// Searches all level edges up to `depth` for a continuity violation and
/// expands the first one found into a witness; nullopt when f is continuous
/// up to that depth. Requires f monotonic and strict up to `depth`
/// (ContractError otherwise).
std::optional<BrouwerWitness> brouwer_witness(const CellFunction& f, int depth);

} // namespace continuum
