#include "pcx/bounds.hpp"

#include <bit>
#include <stdexcept>

namespace pcx {

std::string to_string(BoundInt v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
        s.push_back((char)('0' + (int)(v % 10)));
        v /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

BoundInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BoundInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BoundInt ipow(BoundInt base, int exp) {
    BoundInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

namespace {

BoundInt p2(int e) { return ipow(2, e); }

std::optional<BoundInt> regular_bound(Measure meas, int m, int n) {
    if (n < 3 || (is_binary(meas) && m < 3)) return std::nullopt;
    switch (meas) {
        case Measure::Semigroup: return ipow(n, n);
        case Measure::Reverse:
        case Measure::AtomsCount: return p2(n);
        case Measure::Star: return p2(n - 1) + p2(n - 2);
        case Measure::ProductR: return (BoundInt)m * p2(n) - p2(n - 1);
        case Measure::ProductU: return (BoundInt)m * p2(n) + p2(n - 1);
        case Measure::UnionR:
        case Measure::XorR:
        case Measure::DiffR:
        case Measure::IntersectR:
        case Measure::IntersectU: return (BoundInt)m * n;
        case Measure::UnionU:
        case Measure::XorU: return (BoundInt)m * n + m + n + 1;
        case Measure::DiffU: return (BoundInt)m * n + m;
        default: return std::nullopt;
    }
}

std::optional<BoundInt> right_ideal_bound(Measure meas, int m, int n) {
    if (n < 4 || (is_binary(meas) && m < 4)) return std::nullopt;
    switch (meas) {
        case Measure::Semigroup: return ipow(n, n - 1);
        case Measure::Reverse:
        case Measure::AtomsCount: return p2(n - 1);
        case Measure::Star: return n + 1;
        case Measure::ProductR: return m + p2(n - 2);
        case Measure::ProductU: return m + p2(n - 1) + p2(n - 2) + 1;
        case Measure::UnionR: return (BoundInt)m * n - (m + n - 2);
        case Measure::XorR:
        case Measure::IntersectR:
        case Measure::IntersectU: return (BoundInt)m * n;
        case Measure::DiffR: return (BoundInt)m * n - (m - 1);
        case Measure::UnionU:
        case Measure::XorU: return (BoundInt)m * n + m + n + 1;
        case Measure::DiffU: return (BoundInt)m * n + m;
        default: return std::nullopt;
    }
}

std::optional<BoundInt> prefix_closed_bound(Measure meas, int m, int n) {
    if (n < 4 || (is_binary(meas) && m < 4)) return std::nullopt;
    switch (meas) {
        case Measure::Semigroup: return ipow(n, n - 1);
        case Measure::Reverse:
        case Measure::AtomsCount: return p2(n - 1);
        case Measure::Star: return p2(n - 2) + 1;
        case Measure::ProductR:
        case Measure::ProductU: return (BoundInt)(m + 1) * p2(n - 2);
        case Measure::UnionR:
        case Measure::UnionU:
        case Measure::XorR:
        case Measure::XorU: return (BoundInt)m * n;
        case Measure::DiffR:
        case Measure::DiffU: return (BoundInt)m * n - (n - 1);
        case Measure::IntersectR:
        case Measure::IntersectU: return (BoundInt)m * n - (m + n - 2);
        default: return std::nullopt;
    }
}

std::optional<BoundInt> prefix_free_bound(Measure meas, int m, int n) {
    if (n < 4 || (is_binary(meas) && m < 4)) return std::nullopt;
    if (is_boolean(meas) && m == 4 && n == 4) return std::nullopt;  // excluded cell
    switch (meas) {
        case Measure::Semigroup: return ipow(n, n - 2);
        case Measure::Reverse:
        case Measure::AtomsCount: return p2(n - 2) + 1;
        case Measure::Star: return n;
        case Measure::ProductR:
        case Measure::ProductU: return m + n - 2;
        case Measure::UnionR:
        case Measure::UnionU:
        case Measure::XorR:
        case Measure::XorU: return (BoundInt)m * n - 2;
        case Measure::DiffR:
        case Measure::DiffU: return (BoundInt)m * n - (m + 2 * n - 4);
        case Measure::IntersectR:
        case Measure::IntersectU: return (BoundInt)m * n - 2 * (m + n - 3);
        default: return std::nullopt;
    }
}

std::optional<BoundInt> prefix_free_small_bound(Measure meas, int m, int n) {
    if (n < 4 || (is_binary(meas) && m < 4)) return std::nullopt;
    switch (meas) {
        case Measure::Reverse:
        case Measure::AtomsCount: return p2(n - 2) + 1;
        case Measure::Star: return n;
        case Measure::ProductR:
        case Measure::ProductU: return m + n - 2;
        case Measure::UnionR:
        case Measure::UnionU:
        case Measure::XorR:
        case Measure::XorU: return (BoundInt)m * n - 2;
        case Measure::DiffR:
        case Measure::DiffU: return (BoundInt)m * n - (m + 2 * n - 4);
        case Measure::IntersectR:
        case Measure::IntersectU: return (BoundInt)m * n - 2 * (m + n - 3);
        default: return std::nullopt;  // no semigroup/atom claims for this family
    }
}

std::optional<BoundInt> proper_bound(Measure meas, int m, int n, int j, int k) {
    if (n < 3 || k < 1 || k > n - 2) return std::nullopt;
    if (is_binary(meas) && (m < 3 || j < 1 || j > m - 2)) return std::nullopt;
    switch (meas) {
        case Measure::Semigroup: return ipow(n, n - 1 - k) * ipow(k + 1, k);
        case Measure::Reverse:
        case Measure::AtomsCount: return p2(n - 1);
        case Measure::Star: return p2(n - 2) + p2(n - 2 - k) + 1;
        case Measure::ProductR:
        case Measure::ProductU: return m - 1 - j + (BoundInt)j * p2(n - 2) + p2(n - 1);
        case Measure::UnionR:
        case Measure::UnionU:
        case Measure::XorR:
        case Measure::XorU: return (BoundInt)m * n;
        case Measure::DiffR:
        case Measure::DiffU: return (BoundInt)m * n - (n - 1);
        case Measure::IntersectR:
        case Measure::IntersectU: return (BoundInt)m * n - (m + n - 2);
        default: return std::nullopt;
    }
}

}  // namespace

std::optional<BoundInt> bound(const BoundQuery& q) {
    switch (q.family) {
        case WitnessFamily::Regular: return regular_bound(q.measure, q.m, q.n);
        case WitnessFamily::RightIdeal: return right_ideal_bound(q.measure, q.m, q.n);
        case WitnessFamily::PrefixClosed: return prefix_closed_bound(q.measure, q.m, q.n);
        case WitnessFamily::PrefixFree: return prefix_free_bound(q.measure, q.m, q.n);
        case WitnessFamily::PrefixFreeSmall: return prefix_free_small_bound(q.measure, q.m, q.n);
        case WitnessFamily::Proper: return proper_bound(q.measure, q.m, q.n, q.j, q.k);
    }
    return std::nullopt;
}

namespace {

int popcount_range(std::uint64_t s) { return std::popcount(s); }

BoundInt regular_atom(int n, std::uint64_t s) {
    const int size = popcount_range(s);
    if (size == 0 || size == n) return p2(n) - 1;
    BoundInt sum = 1;
    for (int x = 1; x <= size; ++x)
        for (int y = 1; y <= n - size; ++y)
            sum += binomial(n, x) * binomial(n - x, y);
    return sum;
}

BoundInt right_ideal_atom(int n, std::uint64_t s) {
    const int size = popcount_range(s);
    if (size == n) return p2(n - 1);
    BoundInt sum = 1;
    for (int x = 1; x <= size; ++x)
        for (int y = 1; y <= n - size; ++y)
            sum += binomial(n - 1, x - 1) * binomial(n - x, y);
    return sum;
}

BoundInt prefix_closed_atom(int n, std::uint64_t s) {
    const int size = popcount_range(s);
    if (size == 0) return p2(n - 1);
    BoundInt sum = 1;
    for (int x = 1; x <= n - size; ++x)
        for (int y = 1; y <= size; ++y)
            sum += binomial(n - 1, x - 1) * binomial(n - x, y);
    return sum;
}

BoundInt prefix_free_atom(int n, std::uint64_t s) {
    if (s == (1ULL << (n - 2))) return 2;  // S = {n-2}: the atom {epsilon}
    const int size = popcount_range(s);
    if (size == 0) return p2(n - 2) + p2(n - 3) + 1;
    // The inner sum admits an empty complemented part (y = 0); at
    // S = Q_{n-2} it degenerates to 2^{n-2}+1.
    BoundInt sum = 2;
    for (int x = 1; x <= size; ++x)
        for (int y = 0; y <= n - 2 - size; ++y)
            sum += binomial(n - 2, x) * binomial(n - 2 - x, y);
    return sum;
}

BoundInt proper_atom(int n, int k, std::uint64_t s) {
    const int e_size = n - 1 - k;
    const std::uint64_t e_mask = (1ULL << e_size) - 1;
    const std::uint64_t f_mask = ((1ULL << (n - 1)) - 1) & ~e_mask;
    const int x1 = std::popcount(s & e_mask);
    const int x2 = std::popcount(s & f_mask);
    const int cx1 = e_size - x1;  // |complement of X_1 inside E|
    const int cx2 = k - x2;

    if (x2 != 0) {
        BoundInt sum = 1;
        for (int a = 0; a <= x1; ++a)
            for (int b = 1; b <= x1 + x2 - a; ++b)
                for (int c = 0; c <= cx1; ++c)
                    for (int d = 0; d <= cx1 + cx2 - c; ++d)
                        sum += binomial(e_size, a) * binomial(k, b) *
                               binomial(e_size - a, c) * binomial(k - b, d);
        return sum;
    }
    if (x1 != 0) {
        BoundInt sum = 1;
        for (int a = 0; a <= x1; ++a)
            for (int b = 0; b <= x1 - a; ++b)
                for (int c = 0; c <= cx1; ++c)
                    for (int d = 0; d <= k; ++d)
                        sum += binomial(e_size, a) * binomial(k, b) *
                               binomial(e_size - a, c) * binomial(k - b, d);
        BoundInt corr = 0;
        for (int y = 0; y <= cx1; ++y) corr += binomial(e_size, y);
        return sum - p2(k) * corr;
    }
    return p2(n - 1);
}

}  // namespace

bool atom_index_allowed(WitnessFamily family, int n, int /*k*/, std::uint64_t s) {
    const std::uint64_t full = (1ULL << n) - 1;
    if ((s & ~full) != 0) return false;
    switch (family) {
        case WitnessFamily::Regular: return true;
        case WitnessFamily::RightIdeal: return (s >> (n - 1)) & 1;
        case WitnessFamily::PrefixClosed: return !((s >> (n - 1)) & 1);
        case WitnessFamily::PrefixFree:
            if ((s >> (n - 1)) & 1) return false;
            if ((s >> (n - 2)) & 1) return s == (1ULL << (n - 2));
            return true;
        case WitnessFamily::Proper: return !((s >> (n - 1)) & 1);
        default: return false;
    }
}

BoundInt atom_bound(WitnessFamily family, int n, int k, std::uint64_t s) {
    if (!atom_index_allowed(family, n, k, s))
        throw std::invalid_argument("atom_bound: S does not index an atom of this class");
    switch (family) {
        case WitnessFamily::Regular: return regular_atom(n, s);
        case WitnessFamily::RightIdeal: return right_ideal_atom(n, s);
        case WitnessFamily::PrefixClosed: return prefix_closed_atom(n, s);
        case WitnessFamily::PrefixFree: return prefix_free_atom(n, s);
        case WitnessFamily::Proper: return proper_atom(n, k, s);
        default:
            throw std::invalid_argument("atom_bound: no atom claims for this family");
    }
}

BoundInt regular_reference_bound(Measure meas, int m, int n) {
    switch (meas) {
        case Measure::Semigroup: return ipow(n, n);
        case Measure::Reverse:
        case Measure::AtomsCount: return p2(n);
        case Measure::Star: return p2(n - 1) + p2(n - 2);
        case Measure::ProductR: return (BoundInt)(m - 1) * p2(n) + p2(n - 1);
        case Measure::ProductU: return (BoundInt)m * p2(n) + p2(n - 1);
        case Measure::UnionR:
        case Measure::XorR:
        case Measure::DiffR:
        case Measure::IntersectR:
        case Measure::IntersectU: return (BoundInt)m * n;
        case Measure::UnionU:
        case Measure::XorU: return (BoundInt)(m + 1) * (n + 1);
        case Measure::DiffU: return (BoundInt)m * n + m;
        default:
            throw std::invalid_argument("regular_reference_bound: not a reference measure");
    }
}

}  // namespace pcx
