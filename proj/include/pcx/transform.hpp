#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pcx/dfa.hpp"

namespace pcx {

/// A total self-map of the state set Q_n; images[q] is the image of q.
struct Transformation {
    std::vector<int> images;

    bool operator==(const Transformation&) const = default;
    bool operator<(const Transformation& o) const { return images < o.images; }

    int degree() const { return (int)images.size(); }
    int apply(int q) const { return images[q]; }
};

/// Identity on Q_n.
Transformation identity(int n);

/// k-cycle (q0,...,qk-1); identity outside the cycle. Rejects repeated or
/// out-of-range states. A single-element list degenerates to the identity.
Transformation cycle(int n, std::span<const int> states);
Transformation cycle(int n, std::initializer_list<int> states);

/// (P -> q): sends every state of P to q, identity elsewhere.
Transformation collapse(int n, std::span<const int> from, int to);
Transformation collapse(int n, std::initializer_list<int> from, int to);

/// Ranged shift: q -> q+1 for lo <= q <= hi, identity elsewhere.
Transformation shift_up(int n, int lo, int hi);
/// Ranged shift down mod n: q -> q-1 (mod n) for lo <= q <= hi.
Transformation shift_down_mod(int n, int lo, int hi);

/// Pointwise composition with s applied first: q(s*t) = (qs)t.
Transformation compose(const Transformation& s, const Transformation& t);

/// Piecewise union of transformations with disjoint moved supports, as in
/// multi-factor notations like (n-2 -> n-1)(0,...,n-3). Factors listed
/// later may not move a state an earlier factor already moved to a
/// different image.
Transformation merge(std::span<const Transformation> parts);
Transformation merge(std::initializer_list<Transformation> parts);

/// The transformation induced by each letter of a complete DFA.
std::map<std::string, Transformation> letter_transformations(const Dfa& d);

struct SemigroupResult {
    bool overflowed = false;
    std::uint64_t size = 0;
};

inline constexpr std::uint64_t kDefaultSemigroupCap = 5'000'000;

/// Size of the closure of the generators under composition (generators
/// included; the identity only if generated). Breadth-first closure with
/// right multiplication by generators; reports Overflow past `cap`
/// instead of failing.
SemigroupResult semigroup_size(std::span<const Transformation> generators,
                               std::uint64_t cap = kDefaultSemigroupCap);

/// All elements of the closure, in BFS discovery order. Throws
/// std::length_error when the closure exceeds `cap`.
std::vector<Transformation> semigroup_elements(std::span<const Transformation> generators,
                                               std::uint64_t cap = kDefaultSemigroupCap);

/// Checks that the permutation letters of the k-proper witness generate
/// every permutation of Q_n fixing the blocks E_{n,k}, F_{n,k} and n-1:
/// the generated group must have order (n-1-k)! * k!.
bool check_proper_permutation_lemma(int n, int k);

}  // namespace pcx
