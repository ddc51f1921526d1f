#include "pcx/atoms.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "pcx/constructions.hpp"

namespace pcx {

namespace {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

struct PairGraph {
    std::vector<Pair> states;                  // lexicographic (X, Y) order
    std::vector<std::vector<int>> transitions; // [letter][state]
    std::vector<bool> accepting;
    int initial = 0;
};

PairGraph explore(const Dfa& d, std::uint64_t s) {
    if (d.state_count > 64)
        throw std::invalid_argument("atom_automaton: more than 64 states");
    const std::uint64_t full = d.state_count == 64 ? ~0ULL : (1ULL << d.state_count) - 1;
    std::uint64_t finals = 0;
    for (int q = 0; q < d.state_count; ++q)
        if (d.is_final(q)) finals |= 1ULL << q;

    // Image bitmask of a state set under one letter.
    const int letters = (int)d.alphabet.size();
    std::vector<std::vector<std::uint64_t>> bit(letters, std::vector<std::uint64_t>(d.state_count));
    for (int l = 0; l < letters; ++l)
        for (int q = 0; q < d.state_count; ++q)
            bit[l][q] = 1ULL << d.transitions[l][q];
    auto image = [&](std::uint64_t set, int l) {
        std::uint64_t out = 0;
        while (set) {
            int q = std::countr_zero(set);
            set &= set - 1;
            out |= bit[l][q];
        }
        return out;
    };

    const Pair start{s, full & ~s};
    std::map<Pair, int> ids;
    std::vector<Pair> order;
    ids.emplace(start, 0);
    order.push_back(start);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Pair cur = order[head];
        for (int l = 0; l < letters; ++l) {
            Pair to{image(cur.first, l), image(cur.second, l)};
            if (ids.emplace(to, (int)order.size()).second) order.push_back(to);
        }
    }

    // Renumber pairs lexicographically for deterministic output.
    PairGraph g;
    std::map<Pair, int> lex;
    for (const auto& [p, id] : ids) {
        lex[p] = (int)g.states.size();
        g.states.push_back(p);
    }
    g.initial = lex[start];
    g.accepting.resize(g.states.size());
    g.transitions.assign(letters, std::vector<int>(g.states.size()));
    for (std::size_t i = 0; i < g.states.size(); ++i) {
        const auto& [x, y] = g.states[i];
        g.accepting[i] = (x & ~finals) == 0 && (y & finals) == 0;
        for (int l = 0; l < letters; ++l)
            g.transitions[l][i] = lex[{image(x, l), image(y, l)}];
    }
    return g;
}

bool has_accepting(const PairGraph& g) {
    return std::find(g.accepting.begin(), g.accepting.end(), true) != g.accepting.end();
}

Dfa to_dfa(const PairGraph& g, const std::vector<std::string>& alphabet) {
    Dfa d;
    d.state_count = (int)g.states.size();
    d.alphabet = alphabet;
    d.initial = g.initial;
    d.finals = g.accepting;
    d.transitions = g.transitions;
    return d;
}

}  // namespace

Dfa atom_automaton(const Dfa& d, const AtomIndex& s) {
    return to_dfa(explore(d, s.subset), d.alphabet);
}

std::optional<std::int64_t> atom_complexity(const Dfa& d, const AtomIndex& s) {
    PairGraph g = explore(d, s.subset);
    if (!has_accepting(g)) return std::nullopt;
    // Quotients of A_S live over the ambient alphabet of the language, so
    // no effective-alphabet reduction here (the atom {epsilon} has two
    // quotients even though no letter occurs in its words).
    return minimize(to_dfa(g, d.alphabet)).state_count;
}

AtomReport atoms_report(const Dfa& d) {
    if (d.state_count > 20)
        throw std::invalid_argument("atoms_report: exhaustive subset report needs <= 20 states");
    AtomReport report;
    const std::uint64_t total = 1ULL << d.state_count;
    for (std::uint64_t s = 0; s < total; ++s) {
        AtomEntry e;
        e.subset = s;
        auto c = atom_complexity(d, {s, d.state_count});
        e.is_atom = c.has_value();
        e.complexity = c.value_or(0);
        if (e.is_atom) ++report.atom_count;
        report.entries.push_back(e);
    }
    const std::int64_t rev = complexity(reverse(d));
    if (report.atom_count != rev)
        throw std::logic_error("atoms_report: atom count disagrees with reverse complexity");
    return report;
}

std::int64_t atom_count(const Dfa& d) {
    if (d.state_count > 20)
        throw std::invalid_argument("atom_count: exhaustive subset count needs <= 20 states");
    std::int64_t count = 0;
    const std::uint64_t total = 1ULL << d.state_count;
    for (std::uint64_t s = 0; s < total; ++s)
        if (has_accepting(explore(d, s))) ++count;
    const std::int64_t rev = complexity(reverse(d));
    if (count != rev)
        throw std::logic_error("atom_count: atom count disagrees with reverse complexity");
    return count;
}

}  // namespace pcx
