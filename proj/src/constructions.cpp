#include "pcx/constructions.hpp"

#include <stdexcept>

#include "pcx/atoms.hpp"
#include "pcx/transform.hpp"

namespace pcx {

std::string to_string(BooleanOp op) {
    switch (op) {
        case BooleanOp::Union: return "union";
        case BooleanOp::SymmetricDifference: return "xor";
        case BooleanOp::Difference: return "diff";
        case BooleanOp::Intersection: return "intersect";
    }
    return "?";
}

Nfa reverse(const Dfa& d) {
    Nfa n;
    n.state_count = d.state_count;
    n.alphabet = d.alphabet;
    n.epsilon.assign(d.state_count, 0);
    n.transitions.assign(d.alphabet.size(), std::vector<std::uint64_t>(d.state_count, 0));
    for (std::size_t l = 0; l < d.alphabet.size(); ++l)
        for (int q = 0; q < d.state_count; ++q)
            n.transitions[l][d.transitions[l][q]] |= 1ULL << q;
    for (int q = 0; q < d.state_count; ++q)
        if (d.is_final(q)) n.initials |= 1ULL << q;
    n.finals = 1ULL << d.initial;
    return n;
}

Nfa star(const Dfa& d) {
    Nfa n = as_nfa(d);
    const int fresh = d.state_count;
    n.state_count += 1;
    n.epsilon.push_back(0);
    for (std::size_t l = 0; l < d.alphabet.size(); ++l)
        n.transitions[l].push_back(1ULL << d.transitions[l][d.initial]);
    for (int q = 0; q < d.state_count; ++q)
        if (d.is_final(q)) n.epsilon[q] |= 1ULL << d.initial;
    n.initials = 1ULL << fresh;
    n.finals |= 1ULL << fresh;
    return n;
}

Nfa concat(const Dfa& d1, const Dfa& d2) {
    const auto joint = alphabet_union(d1.alphabet, d2.alphabet);
    const Dfa a = complete(d1, joint);
    const Dfa b = complete(d2, joint);
    const int offset = a.state_count;

    Nfa n;
    n.state_count = a.state_count + b.state_count;
    n.alphabet = joint;
    n.epsilon.assign(n.state_count, 0);
    n.transitions.assign(joint.size(), std::vector<std::uint64_t>(n.state_count, 0));
    for (std::size_t l = 0; l < joint.size(); ++l) {
        for (int q = 0; q < a.state_count; ++q)
            n.transitions[l][q] = 1ULL << a.transitions[l][q];
        for (int q = 0; q < b.state_count; ++q)
            n.transitions[l][offset + q] = 1ULL << (offset + b.transitions[l][q]);
    }
    for (int q = 0; q < a.state_count; ++q)
        if (a.is_final(q)) n.epsilon[q] |= 1ULL << (offset + b.initial);
    n.initials = 1ULL << a.initial;
    for (int q = 0; q < b.state_count; ++q)
        if (b.is_final(q)) n.finals |= 1ULL << (offset + q);
    return n;
}

Dfa boolean(const Dfa& d1, const Dfa& d2, BooleanOp op) {
    const auto joint = alphabet_union(d1.alphabet, d2.alphabet);
    const Dfa a = complete(d1, joint);
    const Dfa b = complete(d2, joint);

    Dfa out;
    out.state_count = a.state_count * b.state_count;
    out.alphabet = joint;
    out.initial = a.initial * b.state_count + b.initial;
    out.finals.resize(out.state_count);
    out.transitions.assign(joint.size(), std::vector<int>(out.state_count));
    for (int p = 0; p < a.state_count; ++p) {
        for (int q = 0; q < b.state_count; ++q) {
            const int s = p * b.state_count + q;
            bool fa = a.is_final(p), fb = b.is_final(q);
            switch (op) {
                case BooleanOp::Union: out.finals[s] = fa || fb; break;
                case BooleanOp::SymmetricDifference: out.finals[s] = fa != fb; break;
                case BooleanOp::Difference: out.finals[s] = fa && !fb; break;
                case BooleanOp::Intersection: out.finals[s] = fa && fb; break;
            }
            for (std::size_t l = 0; l < joint.size(); ++l)
                out.transitions[l][s] = a.transitions[l][p] * b.state_count + b.transitions[l][q];
        }
    }
    return out;
}

std::int64_t measure(const Dfa& lhs, const std::optional<Dfa>& rhs, Measure m) {
    auto need_rhs = [&]() -> const Dfa& {
        if (!rhs) throw std::invalid_argument("measure: binary operation needs a second operand");
        return *rhs;
    };
    switch (m) {
        case Measure::Reverse: return complexity(reverse(lhs));
        case Measure::Star: return complexity(star(lhs));
        case Measure::AtomsCount: return atoms_report(lhs).atom_count;
        case Measure::Semigroup: {
            std::vector<Transformation> gens;
            for (const auto& [name, t] : letter_transformations(lhs)) gens.push_back(t);
            auto r = semigroup_size(gens);
            if (r.overflowed) throw std::overflow_error("measure: semigroup exceeds cap");
            return (std::int64_t)r.size;
        }
        case Measure::ProductR:
        case Measure::ProductU: return complexity(concat(lhs, need_rhs()));
        case Measure::UnionR:
        case Measure::UnionU: return complexity(boolean(lhs, need_rhs(), BooleanOp::Union));
        case Measure::XorR:
        case Measure::XorU:
            return complexity(boolean(lhs, need_rhs(), BooleanOp::SymmetricDifference));
        case Measure::DiffR:
        case Measure::DiffU: return complexity(boolean(lhs, need_rhs(), BooleanOp::Difference));
        case Measure::IntersectR:
        case Measure::IntersectU:
            return complexity(boolean(lhs, need_rhs(), BooleanOp::Intersection));
        default: throw std::invalid_argument("measure: unsupported measure");
    }
}

std::int64_t measure(const Dfa& lhs, const std::optional<Dfa>& rhs, const std::string& which) {
    if (which == "reverse") return measure(lhs, rhs, Measure::Reverse);
    if (which == "star") return measure(lhs, rhs, Measure::Star);
    if (which == "concat" || which == "product") return measure(lhs, rhs, Measure::ProductR);
    if (which == "union") return measure(lhs, rhs, Measure::UnionR);
    if (which == "xor") return measure(lhs, rhs, Measure::XorR);
    if (which == "diff") return measure(lhs, rhs, Measure::DiffR);
    if (which == "intersect") return measure(lhs, rhs, Measure::IntersectR);
    if (which == "semigroup") return measure(lhs, rhs, Measure::Semigroup);
    if (which == "atoms-count" || which == "atoms") return measure(lhs, rhs, Measure::AtomsCount);
    throw std::invalid_argument("measure: unknown measure tag '" + which + "'");
}

}  // namespace pcx
