#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcx/dfa.hpp"

namespace pcx {

/// Index of an atom: the subset S of quotients that appear uncomplemented
/// in the intersection.
struct AtomIndex {
    std::uint64_t subset = 0;
    int ambient = 0;
};

struct AtomEntry {
    std::uint64_t subset = 0;
    bool is_atom = false;
    std::int64_t complexity = 0;  // meaningful only when is_atom
};

struct AtomReport {
    std::vector<AtomEntry> entries;  // one per S, indexed by bitmask
    std::int64_t atom_count = 0;
};

/// The pair-of-subsets automaton tracking (X, Y) = (images of S, images
/// of the complement of S). Initial pair (S, ~S); a pair accepts when X
/// lies inside the finals and Y avoids them. Recognizes the atom A_S.
/// Expects a minimal complete DFA.
Dfa atom_automaton(const Dfa& d, const AtomIndex& s);

/// Quotient complexity of A_S, or nullopt when A_S is empty (S indexes
/// no atom). Non-emptiness is decided by reachability of an accepting
/// pair, never by formula.
std::optional<std::int64_t> atom_complexity(const Dfa& d, const AtomIndex& s);

/// Reports non-emptiness and complexity for every S over the state set.
/// The total count is cross-checked against the complexity of the
/// reversal, which must agree; a mismatch throws (implementation bug).
AtomReport atoms_report(const Dfa& d);

/// Non-emptiness and count only; skips the per-S complexity work.
std::int64_t atom_count(const Dfa& d);

}  // namespace pcx
