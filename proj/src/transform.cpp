#include "pcx/transform.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "pcx/witnesses.hpp"

namespace pcx {

namespace {

void check_state(int n, int q) {
    if (q < 0 || q >= n) throw std::invalid_argument("transformation: state index out of range");
}

}  // namespace

Transformation identity(int n) {
    Transformation t;
    t.images.resize(n);
    std::iota(t.images.begin(), t.images.end(), 0);
    return t;
}

Transformation cycle(int n, std::span<const int> states) {
    Transformation t = identity(n);
    std::set<int> seen;
    for (int q : states) {
        check_state(n, q);
        if (!seen.insert(q).second)
            throw std::invalid_argument("cycle: repeated state");
    }
    for (std::size_t i = 0; i < states.size(); ++i)
        t.images[states[i]] = states[(i + 1) % states.size()];
    return t;
}

Transformation cycle(int n, std::initializer_list<int> states) {
    return cycle(n, std::span<const int>(states.begin(), states.size()));
}

Transformation collapse(int n, std::span<const int> from, int to) {
    check_state(n, to);
    Transformation t = identity(n);
    for (int q : from) {
        check_state(n, q);
        t.images[q] = to;
    }
    return t;
}

Transformation collapse(int n, std::initializer_list<int> from, int to) {
    return collapse(n, std::span<const int>(from.begin(), from.size()), to);
}

Transformation shift_up(int n, int lo, int hi) {
    Transformation t = identity(n);
    for (int q = lo; q <= hi; ++q) {
        check_state(n, q);
        check_state(n, q + 1);
        t.images[q] = q + 1;
    }
    return t;
}

Transformation shift_down_mod(int n, int lo, int hi) {
    if (lo > hi) std::swap(lo, hi);
    Transformation t = identity(n);
    for (int q = lo; q <= hi; ++q) {
        check_state(n, q);
        t.images[q] = (q - 1 + n) % n;
    }
    return t;
}

Transformation compose(const Transformation& s, const Transformation& t) {
    if (s.degree() != t.degree())
        throw std::invalid_argument("compose: transformations of different degree");
    Transformation out;
    out.images.resize(s.images.size());
    for (std::size_t q = 0; q < s.images.size(); ++q)
        out.images[q] = t.images[s.images[q]];
    return out;
}

Transformation merge(std::span<const Transformation> parts) {
    if (parts.empty()) throw std::invalid_argument("merge: no factors");
    const int n = parts.front().degree();
    Transformation out = identity(n);
    std::vector<bool> moved(n, false);
    for (const auto& p : parts) {
        if (p.degree() != n)
            throw std::invalid_argument("merge: transformations of different degree");
        for (int q = 0; q < n; ++q) {
            if (p.images[q] == q) continue;
            if (moved[q] && out.images[q] != p.images[q])
                throw std::invalid_argument("merge: factors move a state to different images");
            out.images[q] = p.images[q];
            moved[q] = true;
        }
    }
    return out;
}

Transformation merge(std::initializer_list<Transformation> parts) {
    return merge(std::span<const Transformation>(parts.begin(), parts.size()));
}

std::map<std::string, Transformation> letter_transformations(const Dfa& d) {
    std::map<std::string, Transformation> out;
    for (std::size_t l = 0; l < d.alphabet.size(); ++l)
        out[d.alphabet[l]] = Transformation{d.transitions[l]};
    return out;
}

namespace {

// Packed fast path: one byte per image, degree <= 8.
std::uint64_t pack(const Transformation& t) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < t.images.size(); ++i)
        v |= (std::uint64_t)t.images[i] << (8 * i);
    return v;
}

template <typename Emit>
bool close_packed(std::span<const Transformation> gens, std::uint64_t cap, Emit emit) {
    const int n = gens.front().degree();
    std::vector<std::vector<int>> gen_rows;
    for (const auto& g : gens) gen_rows.push_back(g.images);

    std::unordered_set<std::uint64_t> seen;
    std::vector<Transformation> queue;
    for (const auto& g : gens)
        if (seen.insert(pack(g)).second) queue.push_back(g);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        if (seen.size() > cap) return false;
        Transformation cur = queue[head];  // queue may reallocate below
        emit(cur);
        for (const auto& row : gen_rows) {
            Transformation next;
            next.images.resize(n);
            for (int q = 0; q < n; ++q) next.images[q] = row[cur.images[q]];
            if (seen.insert(pack(next)).second) queue.push_back(std::move(next));
        }
    }
    return seen.size() <= cap;
}

template <typename Emit>
bool close_generic(std::span<const Transformation> gens, std::uint64_t cap, Emit emit) {
    const int n = gens.front().degree();
    std::set<std::vector<int>> seen;
    std::vector<Transformation> queue;
    for (const auto& g : gens)
        if (seen.insert(g.images).second) queue.push_back(g);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        if (seen.size() > cap) return false;
        Transformation cur = queue[head];
        emit(cur);
        for (const auto& g : gens) {
            Transformation next;
            next.images.resize(n);
            for (int q = 0; q < n; ++q) next.images[q] = g.images[cur.images[q]];
            if (seen.insert(next.images).second) queue.push_back(std::move(next));
        }
    }
    return seen.size() <= cap;
}

}  // namespace

SemigroupResult semigroup_size(std::span<const Transformation> generators, std::uint64_t cap) {
    if (generators.empty()) throw std::invalid_argument("semigroup_size: no generators");
    const int n = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != n)
            throw std::invalid_argument("semigroup_size: generators of different degree");

    std::uint64_t count = 0;
    auto tally = [&](const Transformation&) { ++count; };
    bool ok = n <= 8 ? close_packed(generators, cap, tally)
                     : close_generic(generators, cap, tally);
    if (!ok) return {true, 0};
    return {false, count};
}

std::vector<Transformation> semigroup_elements(std::span<const Transformation> generators,
                                               std::uint64_t cap) {
    if (generators.empty()) throw std::invalid_argument("semigroup_elements: no generators");
    const int n = generators.front().degree();
    std::vector<Transformation> out;
    auto keep = [&](const Transformation& t) { out.push_back(t); };
    bool ok = n <= 8 ? close_packed(generators, cap, keep)
                     : close_generic(generators, cap, keep);
    if (!ok) throw std::length_error("semigroup_elements: closure exceeds cap");
    return out;
}

bool check_proper_permutation_lemma(int n, int k) {
    if (n < 3 || k < 1 || k > n - 2)
        throw std::invalid_argument("check_proper_permutation_lemma: need n >= 3, 1 <= k <= n-2");
    const Dfa d = witness({WitnessFamily::Proper, n, k});
    const Transformation a{d.transitions[d.letter_index("a")]};
    const Transformation b{d.transitions[d.letter_index("b")]};
    const Transformation gens[] = {a, b};
    auto size = semigroup_size(gens).size;

    std::uint64_t expect = 1;
    for (int i = 2; i <= n - 1 - k; ++i) expect *= i;
    for (int i = 2; i <= k; ++i) expect *= i;
    return size == expect;
}

}  // namespace pcx
