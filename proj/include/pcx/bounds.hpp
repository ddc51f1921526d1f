#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pcx/measures.hpp"
#include "pcx/witnesses.hpp"

namespace pcx {

/// Exact integer arithmetic for all bounds; n^n leaves 64 bits around
/// n = 16, so formulas are evaluated in 128 bits. No floating point.
using BoundInt = __int128;

std::string to_string(BoundInt v);

BoundInt binomial(int n, int k);
BoundInt ipow(BoundInt base, int exp);

struct BoundQuery {
    WitnessFamily family;
    Measure measure;
    int m = 0;  // left operand size, binary measures only
    int n = 0;
    int j = 0;  // final count of left operand (proper)
    int k = 0;  // final count of right operand (proper)
};

/// The exact bound for the query, or nullopt (Undefined) when the source
/// theorem excludes the cell (out-of-range parameters, the prefix-free
/// boolean gap at (4,4), measures a family makes no claim about).
std::optional<BoundInt> bound(const BoundQuery& q);

/// Quotient complexity of the atom A_S for the class witness on n states
/// (k final states for the proper family, ignored otherwise). S is a
/// bitmask over the state set. Throws when S cannot index an atom of the
/// class (e.g. a right-ideal atom must contain n-1).
BoundInt atom_bound(WitnessFamily family, int n, int k, std::uint64_t s);

/// Whether S can index an atom of the class at all.
bool atom_index_allowed(WitnessFamily family, int n, int k, std::uint64_t s);

/// Reference values for unrestricted/restricted operations on arbitrary
/// regular languages, used for the boldface comparison in the summary
/// table.
BoundInt regular_reference_bound(Measure measure, int m, int n);

}  // namespace pcx
