#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcx/dfa.hpp"
#include "pcx/measures.hpp"

namespace pcx {

/// The witness DFA families, one per language class. PrefixFreeSmall is
/// the minimal-alphabet prefix-free variant that trades away the
/// semigroup and atom-complexity bounds.
enum class WitnessFamily {
    Regular,
    RightIdeal,
    PrefixClosed,
    PrefixFree,
    PrefixFreeSmall,
    Proper,
};

std::string to_string(WitnessFamily f);
std::optional<WitnessFamily> family_from_string(const std::string& name);

/// Smallest n for which the family is defined.
int family_min_n(WitnessFamily f);

struct WitnessParams {
    WitnessFamily family;
    int n = 0;
    int k = 0;  // Proper only: number of final states, 1 <= k <= n-2
};

/// Partial renaming/deletion map over an ordered alphabet. Entries are
/// (original letter, new name); an empty new name deletes the letter.
/// Original letters not mentioned are deleted as well.
struct Dialect {
    std::vector<std::pair<std::string, std::string>> mapping;

    static Dialect rename(std::initializer_list<std::pair<std::string, std::string>> m);
};

/// Builds the master witness DFA for the family. Letter names per
/// family: a,b,c / a,b,c,d / a,b,c,d,e0..e{n-3} / a,c,d,e,f,g /
/// a,b,c1,c2,d1,d2,e.
Dfa witness(const WitnessParams& p);

/// Renames letters via the dialect; letters with no (or empty) image are
/// dropped together with their transition rows. Rows keep the original
/// letter order. Duplicate target names are rejected.
Dfa apply_dialect(const Dfa& d, const Dialect& dialect);

/// The operand DFA(s) for a (family, measure) cell, with the dialects
/// that attain the bound pre-applied. j/k select the final-state counts
/// for the proper family.
std::pair<Dfa, std::optional<Dfa>> theorem_operands(WitnessFamily family, Measure measure,
                                                    int m, int n, int j = 0, int k = 0);

}  // namespace pcx
