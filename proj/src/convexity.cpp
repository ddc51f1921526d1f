#include "pcx/convexity.hpp"

#include <queue>
#include <stdexcept>

namespace pcx {

namespace {

std::vector<bool> reachable_from(const Dfa& d, int start) {
    std::vector<bool> seen(d.state_count, false);
    std::queue<int> work;
    seen[start] = true;
    work.push(start);
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

}  // namespace

bool is_prefix_convex(const Dfa& d) {
    const auto empty = empty_states(d);
    for (int f = 0; f < d.state_count; ++f) {
        if (!d.is_final(f)) continue;
        const auto seen = reachable_from(d, f);
        for (int q = 0; q < d.state_count; ++q)
            if (seen[q] && !d.is_final(q) && !empty[q]) return false;
    }
    return true;
}

int final_quotients(const Dfa& d) {
    int k = 0;
    for (int q = 0; q < d.state_count; ++q)
        if (d.is_final(q)) ++k;
    return k;
}

LanguageClass classify(const Dfa& d) {
    const int k = final_quotients(d);
    if (k == 0) return LanguageClass::PrefixClosed;  // empty language
    if (!is_prefix_convex(d)) return LanguageClass::NotPrefixConvex;

    if (k == 1) {
        int p = 0;
        while (!d.is_final(p)) ++p;
        bool loops = true, to_empty = true;
        const auto empty = empty_states(d);
        for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
            int t = d.step(p, (int)l);
            loops = loops && t == p;
            to_empty = to_empty && empty[t];
        }
        if (loops) return LanguageClass::RightIdeal;
        if (to_empty) return LanguageClass::PrefixFree;
    }
    if (d.is_final(d.initial)) return LanguageClass::PrefixClosed;
    return LanguageClass::ProperPrefixConvex;
}

bool check_ideal_or_empty(const Dfa& d) {
    if (!is_prefix_convex(d))
        throw std::invalid_argument("check_ideal_or_empty: input is not prefix-convex");
    if (classify(d) == LanguageClass::RightIdeal) return true;
    const auto empty = empty_states(d);
    for (int q = 0; q < d.state_count; ++q)
        if (empty[q]) return true;
    return false;
}

}  // namespace pcx
