#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pcx/dfa.hpp"
#include "pcx/measures.hpp"

namespace pcx {

enum class BooleanOp { Union, SymmetricDifference, Difference, Intersection };

std::string to_string(BooleanOp op);

/// Reversal NFA: transitions reversed, the old finals become the initial
/// set, the old initial state is the unique final state.
Nfa reverse(const Dfa& d);

/// Epsilon-NFA for L(d)*: a fresh final initial state mirroring the old
/// initial state's transitions, plus epsilon edges from every final state
/// back to the old initial state. The empty word is accepted.
Nfa star(const Dfa& d);

/// Epsilon-NFA for L(d1)L(d2). Both operands are first completed over the
/// joint alphabet (sinks for foreign letters), so equal- and mixed-
/// alphabet products flow through the same construction.
Nfa concat(const Dfa& d1, const Dfa& d2);

/// Direct product over the joint alphabet (operands completed first);
/// pair (p,q) is state p*n2+q, finals chosen per the operation. The
/// result is deliberately left unminimized.
Dfa boolean(const Dfa& d1, const Dfa& d2, BooleanOp op);

/// Single measurement entry point: runs the construction selected by
/// `which` and returns its quotient complexity (or the semigroup size /
/// atom count). Tags: reverse, star, concat, union, xor, diff, intersect,
/// semigroup, atoms-count.
std::int64_t measure(const Dfa& lhs, const std::optional<Dfa>& rhs, const std::string& which);

std::int64_t measure(const Dfa& lhs, const std::optional<Dfa>& rhs, Measure m);

}  // namespace pcx
