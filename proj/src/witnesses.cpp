#include "pcx/witnesses.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pcx/transform.hpp"

namespace pcx {

std::string to_string(WitnessFamily f) {
    switch (f) {
        case WitnessFamily::Regular: return "regular";
        case WitnessFamily::RightIdeal: return "right-ideal";
        case WitnessFamily::PrefixClosed: return "prefix-closed";
        case WitnessFamily::PrefixFree: return "prefix-free";
        case WitnessFamily::PrefixFreeSmall: return "prefix-free-small";
        case WitnessFamily::Proper: return "proper";
    }
    return "?";
}

std::optional<WitnessFamily> family_from_string(const std::string& name) {
    if (name == "regular") return WitnessFamily::Regular;
    if (name == "right-ideal") return WitnessFamily::RightIdeal;
    if (name == "prefix-closed") return WitnessFamily::PrefixClosed;
    if (name == "prefix-free") return WitnessFamily::PrefixFree;
    if (name == "prefix-free-small") return WitnessFamily::PrefixFreeSmall;
    if (name == "proper") return WitnessFamily::Proper;
    return std::nullopt;
}

int family_min_n(WitnessFamily f) {
    switch (f) {
        case WitnessFamily::Regular:
        case WitnessFamily::Proper: return 3;
        default: return 4;
    }
}

Dialect Dialect::rename(std::initializer_list<std::pair<std::string, std::string>> m) {
    Dialect d;
    d.mapping.assign(m.begin(), m.end());
    return d;
}

namespace {

Dfa from_letters(int n, int initial, const std::vector<int>& finals,
                 const std::vector<std::pair<std::string, Transformation>>& letters) {
    Dfa d;
    d.state_count = n;
    d.initial = initial;
    d.finals.assign(n, false);
    for (int f : finals) d.finals[f] = true;
    for (const auto& [name, t] : letters) {
        d.alphabet.push_back(name);
        d.transitions.push_back(t.images);
    }
    return d;
}

std::vector<int> range_vec(int lo, int hi) {
    std::vector<int> v;
    for (int q = lo; q <= hi; ++q) v.push_back(q);
    return v;
}

Dfa build_regular(int n) {
    if (n < 3) throw std::invalid_argument("witness: regular family needs n >= 3");
    return from_letters(n, 0, {n - 1},
                        {{"a", cycle(n, range_vec(0, n - 1))},
                         {"b", cycle(n, {0, 1})},
                         {"c", collapse(n, {1}, 0)}});
}

Dfa build_right_ideal(int n) {
    if (n < 4) throw std::invalid_argument("witness: right-ideal family needs n >= 4");
    return from_letters(n, 0, {n - 1},
                        {{"a", cycle(n, range_vec(0, n - 2))},
                         {"b", cycle(n, {0, 1})},
                         {"c", collapse(n, {1}, 0)},
                         {"d", shift_up(n, 0, n - 2)}});
}

Dfa build_prefix_closed(int n) {
    if (n < 4) throw std::invalid_argument("witness: prefix-closed family needs n >= 4");
    std::vector<int> finals = range_vec(0, n - 2);
    return from_letters(n, 0, finals,
                        {{"a", cycle(n, range_vec(0, n - 2))},
                         {"b", cycle(n, {0, 1})},
                         {"c", collapse(n, {1}, 0)},
                         {"d", shift_down_mod(n, n - 2, 0)}});
}

Dfa build_prefix_free(int n) {
    if (n < 4) throw std::invalid_argument("witness: prefix-free family needs n >= 4");
    const Transformation drop = collapse(n, {n - 2}, n - 1);  // (n-2 -> n-1)
    std::vector<std::pair<std::string, Transformation>> letters = {
        {"a", merge({drop, cycle(n, range_vec(0, n - 3))})},
        {"b", merge({drop, cycle(n, {0, 1})})},
        {"c", merge({drop, collapse(n, {1}, 0)})},
        {"d", merge({collapse(n, {0}, n - 2), collapse(n, range_vec(1, n - 1), n - 1)})},
    };
    for (int q = 0; q <= n - 3; ++q)
        letters.emplace_back("e" + std::to_string(q), merge({drop, collapse(n, {q}, n - 2)}));
    return from_letters(n, 0, {n - 2}, letters);
}

Dfa build_prefix_free_small(int n) {
    if (n < 4) throw std::invalid_argument("witness: prefix-free-small family needs n >= 4");
    const Transformation drop = collapse(n, {n - 2}, n - 1);
    return from_letters(n, 0, {n - 2},
                        {{"a", merge({drop, cycle(n, range_vec(0, n - 3))})},
                         {"c", merge({drop, collapse(n, {1}, 0)})},
                         {"d", merge({collapse(n, {0}, n - 2), collapse(n, range_vec(1, n - 1), n - 1)})},
                         {"e", merge({drop, collapse(n, {n - 3}, n - 2)})},
                         {"f", shift_up(n, 0, n - 2)},
                         {"g", drop}});
}

Dfa build_proper(int n, int k) {
    if (n < 3 || k < 1 || k > n - 2)
        throw std::invalid_argument("witness: proper family needs n >= 3 and 1 <= k <= n-2");
    const int e_hi = n - 2 - k;   // top of E_{n,k}
    const int f_lo = n - 1 - k;   // bottom of F_{n,k}
    const int f_hi = n - 2;
    const int e_size = n - 1 - k;

    // a permutes E (full or almost-full cycle by parity) and transposes
    // the low end of F when k >= 2; b is the mirror image.
    Transformation a = cycle(n, range_vec(e_size % 2 == 0 ? 1 : 0, e_hi));
    if (k >= 2) a = merge({a, cycle(n, {f_lo, f_lo + 1})});
    Transformation b = cycle(n, range_vec(k % 2 == 0 ? n - k : f_lo, f_hi));
    if (e_size >= 2) b = merge({b, cycle(n, {0, 1})});

    Transformation c1 = e_size >= 2 ? collapse(n, {1}, 0) : identity(n);
    Transformation c2 = k >= 2 ? collapse(n, {n - k}, f_lo) : identity(n);
    Transformation d1 = merge({collapse(n, {e_hi}, n - 1), shift_up(n, 0, e_hi - 1)});
    Transformation d2 = shift_up(n, f_lo, f_hi);
    Transformation e = collapse(n, {0}, f_lo);

    return from_letters(n, 0, range_vec(f_lo, f_hi),
                        {{"a", a}, {"b", b}, {"c1", c1}, {"c2", c2},
                         {"d1", d1}, {"d2", d2}, {"e", e}});
}

}  // namespace

Dfa witness(const WitnessParams& p) {
    switch (p.family) {
        case WitnessFamily::Regular: return build_regular(p.n);
        case WitnessFamily::RightIdeal: return build_right_ideal(p.n);
        case WitnessFamily::PrefixClosed: return build_prefix_closed(p.n);
        case WitnessFamily::PrefixFree: return build_prefix_free(p.n);
        case WitnessFamily::PrefixFreeSmall: return build_prefix_free_small(p.n);
        case WitnessFamily::Proper: return build_proper(p.n, p.k);
    }
    throw std::invalid_argument("witness: unknown family");
}

Dfa apply_dialect(const Dfa& d, const Dialect& dialect) {
    std::set<std::string> targets;
    for (const auto& [orig, renamed] : dialect.mapping) {
        if (d.letter_index(orig) < 0)
            throw std::invalid_argument("apply_dialect: letter '" + orig + "' not in alphabet");
        if (!renamed.empty() && !targets.insert(renamed).second)
            throw std::invalid_argument("apply_dialect: duplicate target name '" + renamed + "'");
    }
    Dfa out;
    out.state_count = d.state_count;
    out.initial = d.initial;
    out.finals = d.finals;
    for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
        const auto it = std::find_if(dialect.mapping.begin(), dialect.mapping.end(),
                                     [&](const auto& e) { return e.first == d.alphabet[l]; });
        if (it == dialect.mapping.end() || it->second.empty()) continue;  // deleted
        out.alphabet.push_back(it->second);
        out.transitions.push_back(d.transitions[l]);
    }
    return out;
}

namespace {

Dfa keep(const Dfa& master, std::initializer_list<std::string> letters) {
    Dialect d;
    for (const auto& l : letters) d.mapping.emplace_back(l, l);
    return apply_dialect(master, d);
}

Dfa remap(const Dfa& master, std::initializer_list<std::pair<std::string, std::string>> m) {
    return apply_dialect(master, Dialect::rename(m));
}

using Operands = std::pair<Dfa, std::optional<Dfa>>;

Operands unary(Dfa d) { return {std::move(d), std::nullopt}; }

Operands regular_operands(Measure meas, int m, int n) {
    const Dfa wn = build_regular(n);
    switch (meas) {
        case Measure::Semigroup:
        case Measure::Reverse:
        case Measure::AtomsCount:
        case Measure::AtomOfS: return unary(wn);
        case Measure::Star: return unary(keep(wn, {"a", "b"}));
        default: break;
    }
    const Dfa wm = build_regular(m);
    switch (meas) {
        case Measure::ProductR:
            return {keep(wm, {"a", "b"}), remap(wn, {{"a", "a"}, {"c", "b"}})};
        case Measure::ProductU:
            return {keep(wm, {"a", "b"}), remap(wn, {{"a", "a"}, {"b", "c"}, {"c", "b"}})};
        case Measure::UnionR:
        case Measure::XorR:
        case Measure::DiffR:
        case Measure::IntersectR:
            return {keep(wm, {"a", "b"}), remap(wn, {{"a", "b"}, {"b", "a"}})};
        case Measure::UnionU:
        case Measure::XorU:
            return {wm, remap(wn, {{"a", "b"}, {"b", "a"}, {"c", "d"}})};
        case Measure::DiffU:
            return {wm, remap(wn, {{"a", "b"}, {"b", "a"}})};
        case Measure::IntersectU:
            return {keep(wm, {"a", "b"}), remap(wn, {{"a", "b"}, {"b", "a"}})};
        default: break;
    }
    throw std::invalid_argument("theorem_operands: no regular witness for this measure");
}

Operands right_ideal_operands(Measure meas, int m, int n) {
    const Dfa wn = build_right_ideal(n);
    switch (meas) {
        case Measure::Semigroup:
        case Measure::AtomOfS: return unary(wn);
        case Measure::Reverse:
        case Measure::AtomsCount:
        case Measure::Star: return unary(keep(wn, {"a", "d"}));
        default: break;
    }
    const Dfa wm = build_right_ideal(m);
    switch (meas) {
        case Measure::ProductR:
            return {keep(wm, {"a", "c", "d"}), keep(wn, {"a", "c", "d"})};
        case Measure::ProductU:
            return {keep(wm, {"a", "c", "d"}), remap(wn, {{"a", "b"}, {"c", "c"}, {"d", "d"}})};
        case Measure::UnionR:
        case Measure::XorR:
        case Measure::DiffR:
        case Measure::IntersectR:
            return {keep(wm, {"a", "d"}), remap(wn, {{"c", "d"}, {"d", "a"}})};
        case Measure::UnionU:
        case Measure::XorU:
        case Measure::DiffU:
        case Measure::IntersectU:
            return {keep(wm, {"a", "c", "d"}), remap(wn, {{"a", "b"}, {"c", "d"}, {"d", "a"}})};
        default: break;
    }
    throw std::invalid_argument("theorem_operands: no right-ideal witness for this measure");
}

Operands prefix_closed_operands(Measure meas, int m, int n) {
    const Dfa wn = build_prefix_closed(n);
    switch (meas) {
        case Measure::Semigroup:
        case Measure::AtomOfS: return unary(wn);
        case Measure::Reverse:
        case Measure::AtomsCount: return unary(keep(wn, {"a", "d"}));
        case Measure::Star: return unary(keep(wn, {"a", "c", "d"}));
        default: break;
    }
    const Dfa wm = build_prefix_closed(m);
    switch (meas) {
        case Measure::ProductR:
        case Measure::ProductU:
            return {wm, remap(wn, {{"a", "a"}, {"b", "d"}, {"c", "b"}, {"d", "c"}})};
        case Measure::UnionR:
        case Measure::UnionU:
        case Measure::XorR:
        case Measure::XorU:
        case Measure::DiffR:
        case Measure::DiffU:
        case Measure::IntersectR:
        case Measure::IntersectU:
            return {keep(wm, {"a", "b", "d"}), remap(wn, {{"a", "b"}, {"b", "a"}, {"d", "d"}})};
        default: break;
    }
    throw std::invalid_argument("theorem_operands: no prefix-closed witness for this measure");
}

Operands prefix_free_operands(Measure meas, int m, int n) {
    const Dfa wn = build_prefix_free(n);
    switch (meas) {
        case Measure::Semigroup: {
            Dialect dia;
            for (const auto& l : wn.alphabet)
                if (l != "d") dia.mapping.emplace_back(l, l);
            return unary(apply_dialect(wn, dia));
        }
        case Measure::Reverse:
        case Measure::AtomsCount: return unary(keep(wn, {"a", "c", "e0"}));
        case Measure::AtomOfS: return unary(keep(wn, {"a", "b", "c", "e0"}));
        case Measure::Star: return unary(keep(wn, {"a", "d"}));
        default: break;
    }
    const Dfa wm = build_prefix_free(m);
    switch (meas) {
        case Measure::ProductR:
        case Measure::ProductU:
            return {keep(wm, {"a", "d"}), keep(wn, {"a", "d"})};
        case Measure::UnionR:
        case Measure::UnionU:
        case Measure::XorR:
        case Measure::XorU:
        case Measure::DiffR:
        case Measure::DiffU:
        case Measure::IntersectR:
        case Measure::IntersectU: {
            // The second operand renames its own e_{n-3} to the name
            // e_{m-3}; the joint alphabet is {a, b, e_0, e_{m-3}}.
            const std::string em = "e" + std::to_string(m - 3);
            const std::string en = "e" + std::to_string(n - 3);
            return {keep(wm, {"a", "b", "e0", em}),
                    remap(wn, {{"a", "b"}, {"b", "a"}, {"e0", "e0"}, {en, em}})};
        }
        default: break;
    }
    throw std::invalid_argument("theorem_operands: no prefix-free witness for this measure");
}

Operands prefix_free_small_operands(Measure meas, int m, int n) {
    const Dfa wn = build_prefix_free_small(n);
    switch (meas) {
        case Measure::Reverse: return unary(keep(wn, {"a", "c", "e"}));
        case Measure::AtomsCount:
            // Same language as the reverse witness, with e renamed d.
            return unary(remap(wn, {{"a", "a"}, {"c", "c"}, {"e", "d"}}));
        case Measure::Star: return unary(keep(wn, {"a", "d"}));
        default: break;
    }
    const Dfa wm = build_prefix_free_small(m);
    switch (meas) {
        case Measure::ProductR:
        case Measure::ProductU:
            return {keep(wm, {"f"}), keep(wn, {"f"})};
        case Measure::UnionR:
        case Measure::UnionU:
        case Measure::XorR:
        case Measure::XorU:
            return {keep(wm, {"f", "g"}), remap(wn, {{"f", "g"}, {"g", "f"}})};
        case Measure::DiffR:
        case Measure::DiffU:
        case Measure::IntersectR:
        case Measure::IntersectU:
            return {keep(wm, {"a", "e"}), remap(wn, {{"f", "e"}, {"g", "a"}})};
        default: break;
    }
    throw std::invalid_argument("theorem_operands: no prefix-free-small witness for this measure");
}

Operands proper_operands(Measure meas, int m, int n, int j, int k) {
    const Dfa wn = build_proper(n, k);
    switch (meas) {
        case Measure::Semigroup:
        case Measure::AtomOfS: return unary(wn);
        case Measure::Reverse:
        case Measure::AtomsCount: return unary(keep(wn, {"a", "b", "d2", "e"}));
        case Measure::Star: return unary(keep(wn, {"a", "b", "d1", "d2", "e"}));
        default: break;
    }
    const Dfa wm = build_proper(m, j);
    switch (meas) {
        case Measure::ProductR:
        case Measure::ProductU:
            return {keep(wm, {"a", "b", "c1", "d1", "d2", "e"}),
                    remap(wn, {{"a", "a"}, {"b", "d2"}, {"c1", "c1"},
                               {"d1", "d1"}, {"d2", "b"}, {"e", "e"}})};
        case Measure::UnionR:
        case Measure::UnionU:
        case Measure::XorR:
        case Measure::XorU:
        case Measure::DiffR:
        case Measure::DiffU:
        case Measure::IntersectR:
        case Measure::IntersectU:
            return {keep(wm, {"a", "b", "c1", "d1", "d2", "e"}),
                    remap(wn, {{"a", "a"}, {"b", "b"}, {"c1", "e"},
                               {"d1", "d2"}, {"d2", "d1"}, {"e", "c1"}})};
        default: break;
    }
    throw std::invalid_argument("theorem_operands: no proper witness for this measure");
}

}  // namespace

std::pair<Dfa, std::optional<Dfa>> theorem_operands(WitnessFamily family, Measure measure,
                                                    int m, int n, int j, int k) {
    switch (family) {
        case WitnessFamily::Regular: return regular_operands(measure, m, n);
        case WitnessFamily::RightIdeal: return right_ideal_operands(measure, m, n);
        case WitnessFamily::PrefixClosed: return prefix_closed_operands(measure, m, n);
        case WitnessFamily::PrefixFree: return prefix_free_operands(measure, m, n);
        case WitnessFamily::PrefixFreeSmall: return prefix_free_small_operands(measure, m, n);
        case WitnessFamily::Proper: return proper_operands(measure, m, n, j, k);
    }
    throw std::invalid_argument("theorem_operands: unknown family");
}

}  // namespace pcx
