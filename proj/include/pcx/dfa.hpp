#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pcx {

/// Complete deterministic finite automaton over an ordered alphabet.
///
/// States are 0..state_count-1. `transitions` holds one row per letter,
/// aligned with `alphabet`; row[q] is the target of state q under that
/// letter. Every operation in this library expects rows of full length,
/// i.e. a complete automaton.
struct Dfa {
    int state_count = 0;
    std::vector<std::string> alphabet;
    std::vector<std::vector<int>> transitions;
    int initial = 0;
    std::vector<bool> finals;

    bool operator==(const Dfa&) const = default;

    bool is_final(int q) const { return finals[static_cast<std::size_t>(q)]; }
    int step(int q, int letter) const { return transitions[static_cast<std::size_t>(letter)][static_cast<std::size_t>(q)]; }
    /// Index of a letter name, or -1 when absent.
    int letter_index(const std::string& name) const;
};

/// Nondeterministic automaton with optional epsilon transitions and a set
/// of initial states. State sets are bitmasks, so state_count is capped at
/// 64; every construction in this project stays far below that.
struct Nfa {
    int state_count = 0;
    std::vector<std::string> alphabet;
    std::vector<std::vector<std::uint64_t>> transitions;  // [letter][state] -> target set
    std::vector<std::uint64_t> epsilon;                   // [state] -> target set
    std::uint64_t initials = 0;
    std::uint64_t finals = 0;

    int letter_index(const std::string& name) const;
};

enum class LanguageClass {
    Regular,
    RightIdeal,
    PrefixClosed,
    PrefixFree,
    ProperPrefixConvex,
    NotPrefixConvex,
};

std::string to_string(LanguageClass c);

/// Throws std::invalid_argument naming the offending field when the
/// automaton violates a structural invariant.
void validate(const Dfa& d);

/// Ordered union of two alphabets: letters of `a` first, then letters of
/// `b` not already present, both in their original order.
std::vector<std::string> alphabet_union(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b);

/// Extends an automaton to a larger alphabet. Letters absent from the
/// input send every state to a fresh non-final sink; the sink loops to
/// itself on all letters. The language is unchanged. When the automaton
/// is already total over `alphabet`, it is returned as-is (no sink).
Dfa complete(const Dfa& d, const std::vector<std::string>& alphabet);
Nfa complete(const Nfa& n, const std::vector<std::string>& alphabet);

Nfa as_nfa(const Dfa& d);

/// Accessible subset construction with epsilon closure applied first.
/// Only reachable subsets become states; the empty subset, if reachable,
/// is a non-final sink. Subset states are renumbered in lexicographic
/// bitset order for deterministic output.
Dfa determinize(const Nfa& n);

/// Unique minimal complete DFA for the same language: unreachable-state
/// removal followed by partition refinement. States are renumbered
/// canonically by BFS order from the initial state over the ordered
/// alphabet, so isomorphism checks reduce to operator==.
Dfa minimize(const Dfa& d);

/// Letters that occur in at least one accepted word: there is a reachable
/// state q whose target under the letter can still reach a final state.
std::vector<std::string> effective_alphabet(const Dfa& d);

/// Keeps only the rows of the named letters (in their original order).
Dfa restrict_alphabet(const Dfa& d, const std::vector<std::string>& keep);

/// Quotient complexity: state count of the minimal complete DFA over the
/// language's own effective alphabet. Letters that occur in no accepted
/// word are dropped before minimization.
std::int64_t complexity(const Dfa& d);
std::int64_t complexity(const Nfa& n);

/// Complexity of the language of each state, i.e. of the DFA re-rooted
/// at that state (with effective-alphabet reduction). Expects a minimal
/// input so every state is reachable.
std::vector<std::int64_t> quotient_complexities(const Dfa& d);

/// Language equality over the union alphabet; letters missing in one
/// operand are routed through completion.
bool equivalent(const Dfa& a, const Dfa& b);

/// Runs a word given as letter indices into d.alphabet.
bool accepts(const Dfa& d, std::span<const int> word);
bool accepts(const Nfa& n, std::span<const int> word);

/// States whose language is empty (no final state reachable).
std::vector<bool> empty_states(const Dfa& d);
std::vector<bool> reachable_states(const Dfa& d);

}  // namespace pcx
