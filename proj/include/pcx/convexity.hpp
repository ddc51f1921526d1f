#pragma once

#include "pcx/dfa.hpp"

namespace pcx {

/// Prefix-convexity test on a minimal complete DFA: every state reachable
/// from a final state must be final or empty.
bool is_prefix_convex(const Dfa& d);

/// Classifies a minimal complete DFA into one of the prefix-convex
/// subclasses, or NotPrefixConvex. Subclass priority when several
/// conditions hold: right ideal, then prefix-free, then prefix-closed.
/// The empty language classifies as prefix-closed, {epsilon} as
/// prefix-free.
LanguageClass classify(const Dfa& d);

/// Number of final states; the k of a k-proper language.
int final_quotients(const Dfa& d);

/// A prefix-convex language is a right ideal or has an empty quotient.
/// Throws std::invalid_argument when the input is not prefix-convex.
bool check_ideal_or_empty(const Dfa& d);

}  // namespace pcx
