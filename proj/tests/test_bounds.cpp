#include <doctest.h>

#include <stdexcept>

#include <bit>

#include "pcx/bounds.hpp"

using namespace pcx;
using F = WitnessFamily;

TEST_CASE("frozen bound values") {
    CHECK(bound({F::Proper, Measure::Semigroup, 0, 4, 0, 2}) == BoundInt(36));
    CHECK(bound({F::PrefixClosed, Measure::ProductR, 4, 4}) == BoundInt(20));
    CHECK(bound({F::Proper, Measure::ProductR, 4, 4, 1, 1}) == BoundInt(14));
    CHECK(bound({F::Regular, Measure::Semigroup, 0, 7}) == BoundInt(823543));
    CHECK(bound({F::RightIdeal, Measure::UnionR, 4, 4}) == BoundInt(10));
    CHECK(bound({F::PrefixFree, Measure::IntersectR, 4, 5}) == BoundInt(8));
}

TEST_CASE("excluded cells are undefined, not zero") {
    CHECK_FALSE(bound({F::PrefixFree, Measure::UnionR, 4, 4}).has_value());
    CHECK(bound({F::PrefixFree, Measure::UnionR, 4, 5}).has_value());
    CHECK(bound({F::PrefixFree, Measure::ProductR, 4, 4}).has_value());  // product has no gap
    CHECK_FALSE(bound({F::Regular, Measure::Star, 0, 2}).has_value());
    CHECK_FALSE(bound({F::RightIdeal, Measure::Semigroup, 0, 3}).has_value());
    CHECK_FALSE(bound({F::PrefixFreeSmall, Measure::Semigroup, 0, 5}).has_value());
    CHECK_FALSE(bound({F::Proper, Measure::Star, 0, 5, 0, 4}).has_value());
}

TEST_CASE("frozen atom bounds") {
    CHECK(atom_bound(F::Regular, 3, 0, 0b001) == BoundInt(10));
    CHECK(atom_bound(F::Regular, 4, 0, 0) == BoundInt(15));  // 2^n - 1
    CHECK(atom_bound(F::Proper, 4, 1, 0) == BoundInt(8));    // 2^{n-1}
    CHECK(atom_bound(F::PrefixFree, 5, 0, 1ULL << 3) == BoundInt(2));
    CHECK_THROWS_AS(atom_bound(F::RightIdeal, 4, 0, 0b0111), std::invalid_argument);
}

TEST_CASE("regular atom bound depends only on the subset size") {
    for (int n = 3; n <= 7; ++n) {
        for (std::uint64_t s = 1; s + 1 < (1ULL << n); ++s) {
            const int size = std::popcount(s);
            const std::uint64_t canon = (1ULL << size) - 1;
            REQUIRE(atom_bound(F::Regular, n, 0, s) == atom_bound(F::Regular, n, 0, canon));
        }
    }
}

TEST_CASE("closed and ideal atom bounds swap under complementation") {
    for (int n = 4; n <= 7; ++n) {
        const std::uint64_t full = (1ULL << n) - 1;
        for (std::uint64_t s = 0; s <= full; ++s) {
            if (!atom_index_allowed(F::PrefixClosed, n, 0, s)) continue;
            REQUIRE(atom_bound(F::PrefixClosed, n, 0, s) ==
                    atom_bound(F::RightIdeal, n, 0, full & ~s));
        }
    }
}

TEST_CASE("proper semigroup bound peaks at k = n-2") {
    for (int n = 3; n <= 12; ++n) {
        BoundInt best = 0;
        int best_k = 0;
        for (int k = 1; k <= n - 2; ++k) {
            BoundInt v = *bound({F::Proper, Measure::Semigroup, 0, n, 0, k});
            if (v > best) {
                best = v;
                best_k = k;
            }
        }
        REQUIRE(best_k == n - 2);
        REQUIRE(best == (BoundInt)n * ipow(n - 1, n - 2));
    }
}

TEST_CASE("proper star bound peaks at k = 1") {
    for (int n = 4; n <= 12; ++n) {
        BoundInt best = 0;
        int best_k = 0;
        for (int k = 1; k <= n - 2; ++k) {
            BoundInt v = *bound({F::Proper, Measure::Star, 0, n, 0, k});
            if (v > best) {
                best = v;
                best_k = k;
            }
        }
        REQUIRE(best_k == 1);
        REQUIRE(best == ipow(2, n - 2) + ipow(2, n - 3) + 1);
    }
}

TEST_CASE("reference bounds for arbitrary regular languages") {
    CHECK(regular_reference_bound(Measure::Star, 0, 5) == BoundInt(24));
    CHECK(regular_reference_bound(Measure::ProductU, 3, 3) == BoundInt(28));
    CHECK(regular_reference_bound(Measure::UnionU, 3, 4) == BoundInt(20));
    // (m-1)2^n + 2^{n-1} and m2^n - 2^{n-1} are the same number.
    for (int m = 3; m <= 8; ++m)
        for (int n = 3; n <= 8; ++n)
            REQUIRE(regular_reference_bound(Measure::ProductR, m, n) ==
                    *bound({F::Regular, Measure::ProductR, m, n}));
}

TEST_CASE("128-bit arithmetic survives n^n at n = 16") {
    CHECK(to_string(ipow(16, 16)) == "18446744073709551616");  // just past 2^64
    CHECK(to_string(binomial(40, 20)) == "137846528820");
    CHECK(binomial(5, 7) == BoundInt(0));
    CHECK(binomial(5, -1) == BoundInt(0));
}
