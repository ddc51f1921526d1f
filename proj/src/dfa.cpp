#include "pcx/dfa.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <queue>
#include <stdexcept>

namespace pcx {

int Dfa::letter_index(const std::string& name) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return (int)i;
    return -1;
}

int Nfa::letter_index(const std::string& name) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return (int)i;
    return -1;
}

std::string to_string(LanguageClass c) {
    switch (c) {
        case LanguageClass::Regular: return "regular";
        case LanguageClass::RightIdeal: return "right-ideal";
        case LanguageClass::PrefixClosed: return "prefix-closed";
        case LanguageClass::PrefixFree: return "prefix-free";
        case LanguageClass::ProperPrefixConvex: return "proper";
        case LanguageClass::NotPrefixConvex: return "not-prefix-convex";
    }
    return "?";
}

void validate(const Dfa& d) {
    if (d.state_count <= 0)
        throw std::invalid_argument("states: must be a positive integer");
    for (std::size_t i = 0; i < d.alphabet.size(); ++i)
        for (std::size_t j = i + 1; j < d.alphabet.size(); ++j)
            if (d.alphabet[i] == d.alphabet[j])
                throw std::invalid_argument("alphabet: duplicate letter '" + d.alphabet[i] + "'");
    if (d.transitions.size() != d.alphabet.size())
        throw std::invalid_argument("transitions: need exactly one row per letter");
    for (std::size_t l = 0; l < d.transitions.size(); ++l) {
        if (d.transitions[l].size() != (std::size_t)d.state_count)
            throw std::invalid_argument("transitions: row for '" + d.alphabet[l] +
                                        "' has length != state count");
        for (int t : d.transitions[l])
            if (t < 0 || t >= d.state_count)
                throw std::invalid_argument("transitions: transition target out of range in row '" +
                                            d.alphabet[l] + "'");
    }
    if (d.initial < 0 || d.initial >= d.state_count)
        throw std::invalid_argument("initial: state index out of range");
    if (d.finals.size() != (std::size_t)d.state_count)
        throw std::invalid_argument("finals: flag vector has length != state count");
}

std::vector<std::string> alphabet_union(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& x : b)
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

Dfa complete(const Dfa& d, const std::vector<std::string>& alphabet) {
    for (const auto& l : d.alphabet)
        if (std::find(alphabet.begin(), alphabet.end(), l) == alphabet.end())
            throw std::invalid_argument("complete: alphabet is missing letter '" + l + "'");
    if (alphabet == d.alphabet) return d;
    if (alphabet.size() == d.alphabet.size()) {
        // Same letters, different order: realign the rows, no sink.
        Dfa out = d;
        out.alphabet = alphabet;
        for (std::size_t l = 0; l < alphabet.size(); ++l)
            out.transitions[l] = d.transitions[d.letter_index(alphabet[l])];
        return out;
    }

    Dfa out;
    out.state_count = d.state_count + 1;
    const int sink = d.state_count;
    out.alphabet = alphabet;
    out.initial = d.initial;
    out.finals = d.finals;
    out.finals.push_back(false);
    out.transitions.resize(alphabet.size());
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
        int src = d.letter_index(alphabet[l]);
        auto& row = out.transitions[l];
        if (src >= 0) {
            row = d.transitions[src];
            row.push_back(sink);
        } else {
            row.assign(out.state_count, sink);
        }
    }
    return out;
}

Nfa complete(const Nfa& n, const std::vector<std::string>& alphabet) {
    for (const auto& l : n.alphabet)
        if (std::find(alphabet.begin(), alphabet.end(), l) == alphabet.end())
            throw std::invalid_argument("complete: alphabet is missing letter '" + l + "'");
    if (alphabet == n.alphabet) return n;
    if (alphabet.size() == n.alphabet.size()) {
        Nfa out = n;
        out.alphabet = alphabet;
        for (std::size_t l = 0; l < alphabet.size(); ++l)
            out.transitions[l] = n.transitions[n.letter_index(alphabet[l])];
        return out;
    }

    Nfa out;
    out.state_count = n.state_count + 1;
    const int sink = n.state_count;
    const std::uint64_t sink_bit = 1ULL << sink;
    out.alphabet = alphabet;
    out.initials = n.initials;
    out.finals = n.finals;
    out.epsilon = n.epsilon;
    out.epsilon.push_back(0);
    out.transitions.resize(alphabet.size());
    for (std::size_t l = 0; l < alphabet.size(); ++l) {
        int src = n.letter_index(alphabet[l]);
        auto& row = out.transitions[l];
        if (src >= 0) {
            row = n.transitions[src];
            row.push_back(sink_bit);
        } else {
            row.assign(out.state_count, sink_bit);
        }
    }
    return out;
}

Nfa as_nfa(const Dfa& d) {
    Nfa n;
    n.state_count = d.state_count;
    n.alphabet = d.alphabet;
    n.epsilon.assign(d.state_count, 0);
    n.initials = 1ULL << d.initial;
    n.transitions.resize(d.alphabet.size());
    for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
        n.transitions[l].resize(d.state_count);
        for (int q = 0; q < d.state_count; ++q)
            n.transitions[l][q] = 1ULL << d.transitions[l][q];
    }
    for (int q = 0; q < d.state_count; ++q)
        if (d.is_final(q)) n.finals |= 1ULL << q;
    return n;
}

namespace {

std::uint64_t eps_closure(const Nfa& n, std::uint64_t set) {
    std::uint64_t cur = set;
    for (;;) {
        std::uint64_t next = cur;
        std::uint64_t rest = cur;
        while (rest) {
            int q = std::countr_zero(rest);
            rest &= rest - 1;
            next |= n.epsilon[q];
        }
        if (next == cur) return cur;
        cur = next;
    }
}

std::uint64_t nfa_step(const Nfa& n, std::uint64_t set, int letter) {
    std::uint64_t out = 0;
    while (set) {
        int q = std::countr_zero(set);
        set &= set - 1;
        out |= n.transitions[letter][q];
    }
    return eps_closure(n, out);
}

}  // namespace

Dfa determinize(const Nfa& n) {
    if (n.state_count > 64)
        throw std::invalid_argument("determinize: more than 64 NFA states");

    const std::uint64_t start = eps_closure(n, n.initials);
    std::map<std::uint64_t, int> ids;
    std::vector<std::uint64_t> sets;
    std::queue<std::uint64_t> work;
    ids.emplace(start, 0);
    sets.push_back(start);
    work.push(start);
    const int letters = (int)n.alphabet.size();
    while (!work.empty()) {
        std::uint64_t cur = work.front();
        work.pop();
        for (int l = 0; l < letters; ++l) {
            std::uint64_t to = nfa_step(n, cur, l);
            if (ids.emplace(to, 0).second) {
                sets.push_back(to);
                work.push(to);
            }
        }
    }
    // Lexicographic bitset numbering keeps the output deterministic.
    std::sort(sets.begin(), sets.end());
    for (std::size_t i = 0; i < sets.size(); ++i) ids[sets[i]] = (int)i;

    Dfa out;
    out.state_count = (int)sets.size();
    out.alphabet = n.alphabet;
    out.initial = ids[start];
    out.finals.resize(sets.size());
    out.transitions.assign(letters, std::vector<int>(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out.finals[i] = (sets[i] & n.finals) != 0;
        for (int l = 0; l < letters; ++l)
            out.transitions[l][i] = ids[nfa_step(n, sets[i], l)];
    }
    return out;
}

std::vector<bool> reachable_states(const Dfa& d) {
    std::vector<bool> seen(d.state_count, false);
    std::queue<int> work;
    seen[d.initial] = true;
    work.push(d.initial);
    while (!work.empty()) {
        int q = work.front();
        work.pop();
        for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
            int t = d.step(q, (int)l);
            if (!seen[t]) {
                seen[t] = true;
                work.push(t);
            }
        }
    }
    return seen;
}

std::vector<bool> empty_states(const Dfa& d) {
    // Fixpoint for co-reachability of a final state.
    std::vector<bool> coreach(d.state_count, false);
    for (int q = 0; q < d.state_count; ++q) coreach[q] = d.is_final(q);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int q = 0; q < d.state_count; ++q) {
            if (coreach[q]) continue;
            for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
                if (coreach[d.step(q, (int)l)]) {
                    coreach[q] = true;
                    changed = true;
                    break;
                }
            }
        }
    }
    std::vector<bool> empty(d.state_count);
    for (int q = 0; q < d.state_count; ++q) empty[q] = !coreach[q];
    return empty;
}

Dfa minimize(const Dfa& d) {
    const auto reach = reachable_states(d);
    std::vector<int> compact(d.state_count, -1);
    std::vector<int> states;
    for (int q = 0; q < d.state_count; ++q)
        if (reach[q]) {
            compact[q] = (int)states.size();
            states.push_back(q);
        }
    const int n = (int)states.size();
    const int letters = (int)d.alphabet.size();

    // Moore refinement by successor-class signatures.
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i) cls[i] = d.is_final(states[i]) ? 1 : 0;
    int count = 0;
    for (;;) {
        std::map<std::vector<int>, int> index;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> sig;
            sig.reserve(letters + 1);
            sig.push_back(cls[i]);
            for (int l = 0; l < letters; ++l)
                sig.push_back(cls[compact[d.step(states[i], l)]]);
            auto it = index.emplace(std::move(sig), (int)index.size()).first;
            next[i] = it->second;
        }
        int next_count = (int)index.size();
        cls = std::move(next);
        if (next_count == count) break;
        count = next_count;
    }

    // Quotient automaton, renumbered by BFS discovery order from the
    // initial class so isomorphic results compare equal.
    std::vector<int> rep(count, -1);
    for (int i = 0; i < n; ++i)
        if (rep[cls[i]] < 0) rep[cls[i]] = states[i];

    auto cls_of = [&](int q) { return cls[compact[q]]; };
    std::vector<int> order(count, -1);
    std::vector<int> bfs;
    order[cls_of(d.initial)] = 0;
    bfs.push_back(cls_of(d.initial));
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        int r = rep[bfs[head]];
        for (int l = 0; l < letters; ++l) {
            int t = cls_of(d.step(r, l));
            if (order[t] < 0) {
                order[t] = (int)bfs.size();
                bfs.push_back(t);
            }
        }
    }
    assert((int)bfs.size() == count);

    Dfa out;
    out.state_count = count;
    out.alphabet = d.alphabet;
    out.initial = 0;
    out.finals.resize(count);
    out.transitions.assign(letters, std::vector<int>(count));
    for (int c = 0; c < count; ++c) {
        int r = rep[bfs[c]];
        out.finals[c] = d.is_final(r);
        for (int l = 0; l < letters; ++l)
            out.transitions[l][c] = order[cls_of(d.step(r, l))];
    }
    return out;
}

std::vector<std::string> effective_alphabet(const Dfa& d) {
    const auto reach = reachable_states(d);
    const auto empty = empty_states(d);
    std::vector<std::string> out;
    for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
        bool used = false;
        for (int q = 0; q < d.state_count && !used; ++q)
            if (reach[q] && !empty[d.step(q, (int)l)]) used = true;
        if (used) out.push_back(d.alphabet[l]);
    }
    return out;
}

Dfa restrict_alphabet(const Dfa& d, const std::vector<std::string>& keep) {
    Dfa out;
    out.state_count = d.state_count;
    out.initial = d.initial;
    out.finals = d.finals;
    for (const auto& name : keep) {
        int l = d.letter_index(name);
        if (l < 0) throw std::invalid_argument("restrict_alphabet: unknown letter '" + name + "'");
        out.alphabet.push_back(name);
        out.transitions.push_back(d.transitions[l]);
    }
    return out;
}

std::int64_t complexity(const Dfa& d) {
    return minimize(restrict_alphabet(d, effective_alphabet(d))).state_count;
}

std::int64_t complexity(const Nfa& n) {
    return complexity(determinize(n));
}

std::vector<std::int64_t> quotient_complexities(const Dfa& d) {
    std::vector<std::int64_t> out;
    out.reserve(d.state_count);
    for (int q = 0; q < d.state_count; ++q) {
        Dfa rooted = d;
        rooted.initial = q;
        out.push_back(complexity(rooted));
    }
    return out;
}

bool equivalent(const Dfa& a, const Dfa& b) {
    const auto joint = alphabet_union(a.alphabet, b.alphabet);
    const Dfa ca = complete(a, joint);
    const Dfa cb = complete(b, joint);
    std::vector<bool> seen((std::size_t)ca.state_count * cb.state_count, false);
    std::queue<std::pair<int, int>> work;
    auto push = [&](int p, int q) {
        std::size_t key = (std::size_t)p * cb.state_count + q;
        if (!seen[key]) {
            seen[key] = true;
            work.emplace(p, q);
        }
    };
    push(ca.initial, cb.initial);
    while (!work.empty()) {
        auto [p, q] = work.front();
        work.pop();
        if (ca.is_final(p) != cb.is_final(q)) return false;
        for (std::size_t l = 0; l < joint.size(); ++l)
            push(ca.step(p, (int)l), cb.step(q, (int)l));
    }
    return true;
}

bool accepts(const Dfa& d, std::span<const int> word) {
    int q = d.initial;
    for (int l : word) q = d.step(q, l);
    return d.is_final(q);
}

bool accepts(const Nfa& n, std::span<const int> word) {
    std::uint64_t cur = eps_closure(n, n.initials);
    for (int l : word) cur = nfa_step(n, cur, l);
    return (cur & n.finals) != 0;
}

}  // namespace pcx
