#include <stdexcept>

#include "doctest.h"
#include "secantry/dejonq.hpp"

using namespace secantry;

namespace {

SecantProblem make(Int g, Int r, Int d, Int e, Int f) {
    return SecantProblem(SeriesParams(g, r, d), e, f);
}

}  // namespace

TEST_CASE("pattern validation") {
    CHECK_NOTHROW(DJPattern({3, 3}, {0, 1}, {1, 1}));
    CHECK_THROWS_AS(DJPattern({3}, {0, 1}, {1}), std::invalid_argument);     // length mismatch
    CHECK_THROWS_AS(DJPattern({3}, {0}, {0}), std::invalid_argument);        // zero multiplicity
    CHECK_THROWS_AS(DJPattern({-1}, {0}, {1}), std::invalid_argument);       // negative degree
    const DJPattern p({3, 3}, {0, 1}, {1, 1});
    CHECK(p.weighted_degree() == 6);
    CHECK(p.length() == 6);
    CHECK(p.valid_for_genus(4));
    CHECK_FALSE(p.valid_for_genus(7));  // rho(7,1,3) = -1
}

TEST_CASE("decomposition locus dimension") {
    CHECK(delta_dim(4, DJPattern({3, 3}, {0, 1}, {1, 1})) == 4);
    CHECK(delta_dim(4, DJPattern({6}, {3}, {1})) == 3);
    CHECK(delta_dim(6, DJPattern({4, 8}, {0, 3}, {1, 1})) == 9);
    CHECK_THROWS_AS(delta_dim(7, DJPattern({3, 3}, {0, 1}, {1, 1})), std::domain_error);
}

TEST_CASE("pattern lower bound") {
    CHECK(dj_lower_bound(SeriesParams(4, 3, 6), DJPattern({3, 3}, {0, 1}, {1, 1})) == 1);
    CHECK(dj_lower_bound(SeriesParams(4, 3, 6), DJPattern({6}, {3}, {1})) == 0);
    for (Int g = 2; g <= 9; ++g) {
        CHECK(dj_lower_bound(SeriesParams(g, g - 1, 2 * g - 2),
                             DJPattern({2 * g - 2}, {g - 1}, {1})) == 0);
    }
    // Pattern must match the ambient series.
    CHECK_THROWS_AS(dj_lower_bound(SeriesParams(4, 3, 7), DJPattern({3, 3}, {0, 1}, {1, 1})),
                    std::domain_error);
    CHECK_THROWS_AS(dj_lower_bound(SeriesParams(4, 0, 6), DJPattern({3, 3}, {0, 1}, {1, 1})),
                    std::domain_error);
}

TEST_CASE("secant-pattern expected dimension") {
    CHECK(dj_ef_expected(make(12, 5, 15, 4, 1)) == -1);
    CHECK(dj_ef_expected(make(10, 4, 12, 4, 1)) == 1);
    // s = 1 makes the correction vanish.
    CHECK(dj_ef_expected(make(4, 3, 6, 2, 1)) == expected_secant_dim(make(4, 3, 6, 2, 1)));
    CHECK_THROWS_AS(dj_ef_expected(make(12, 5, 15, 8, 1)), std::domain_error);
}

TEST_CASE("secant-pattern expected dimension with ramification") {
    const SecantProblem P = make(12, 5, 15, 4, 1);
    CHECK(dj_ef_expected_ram(P, RamificationSequence({0, 0, 0}, 11)) == -1);
    CHECK(dj_ef_expected_ram(P, RamificationSequence({1, 1, 1}, 11)) == -4);
    CHECK(dj_ef_expected_ram(make(10, 4, 12, 4, 1), RamificationSequence({1, 1}, 8)) == -1);
    CHECK_THROWS_AS(dj_ef_expected_ram(P, RamificationSequence({1, 1}, 11)), std::invalid_argument);
}

TEST_CASE("canonical-series dimension") {
    CHECK(canonical_dj_dim(4, 3, 1) == 1);
    CHECK(canonical_dj_dim(5, 4, 1) == 2);
    CHECK(canonical_dj_dim(6, 4, 1) == 2);
    CHECK_THROWS_AS(canonical_dj_dim(4, 2, 3), std::domain_error);  // rho < 0
    CHECK_THROWS_AS(canonical_dj_dim(4, 7, 1), std::domain_error);  // d2 > 2g-2
    CHECK_THROWS_AS(canonical_dj_dim(4, 6, 0), std::domain_error);  // residual degree < 0
}

TEST_CASE("canonical-series dimension, both routes") {
    // The naive triple count exceeds the formula by exactly r2.
    CHECK(canonical_dj_pair_count(4, 3, 1) - canonical_dj_dim(4, 3, 1) == 1);
    CHECK(canonical_dj_pair_count(6, 4, 1) - canonical_dj_dim(6, 4, 1) == 1);
    CHECK(canonical_dj_pair_count(6, 6, 2) - canonical_dj_dim(6, 6, 2) == 2);
}

TEST_CASE("canonical-series dimension with ramification") {
    CHECK(canonical_dj_dim_ram(4, 3, 1, RamificationSequence({0, 0}, 3)) == 1);
    CHECK(canonical_dj_dim_ram(4, 3, 1, RamificationSequence({1, 1}, 3)) == -1);
    CHECK(canonical_dj_dim_ram(5, 4, 1, RamificationSequence({0, 1}, 4)) == 1);
    CHECK_THROWS_AS(canonical_dj_dim_ram(4, 3, 1, RamificationSequence({0, 0, 0}, 3)),
                    std::invalid_argument);
}

TEST_CASE("canonical consistency against the pattern bound, exhaustive g <= 12") {
    long long cases = 0;
    for (Int g = 1; g <= 12; ++g) {
        const SeriesParams canonical(g, g - 1, 2 * g - 2);
        for (Int d2 = 0; d2 <= 2 * g - 2; ++d2) {
            for (Int r2 = 0; r2 <= d2; ++r2) {
                if (rho_value(g, r2, d2) < 0 || g - d2 + r2 - 1 < 0) continue;
                ++cases;
                REQUIRE(canonical_dj_dim(g, d2, r2) ==
                        dj_lower_bound(canonical, DJPattern({2 * g - 2 - d2, d2}, {0, r2}, {1, 1})));
            }
        }
    }
    CHECK(cases > 100);
}

TEST_CASE("secant-pattern value equals the general pattern bound") {
    long long cases = 0;
    for (Int g = 1; g <= 14; ++g) {
        for (Int r = 0; r <= 6; ++r) {
            for (Int d = r; d <= 2 * g - 2 + r; ++d) {
                const SeriesParams base(g, r, d);
                for (Int e = 1; e <= std::min<Int>(8, d); ++e) {
                    for (Int f = 0; f < e; ++f) {
                        const SecantProblem P(base, e, f);
                        if (P.r_prime() < 0) continue;
                        if (rho_value(g, P.r_prime(), P.d_prime()) < 0) continue;
                        ++cases;
                        REQUIRE(dj_ef_expected(P) == dj_lower_bound(base, secant_pattern(P)));
                    }
                }
            }
        }
    }
    CHECK(cases > 1000);
}

TEST_CASE("dimension-theorem value") {
    CHECK(thm4_dim(make(12, 5, 15, 4, 1)) == -1);
    CHECK(thm4_dim(make(10, 4, 12, 4, 1)) == 1);
    CHECK_FALSE(thm4_dim(make(4, 3, 6, 4, 1)).has_value());  // expdim > r'+2
    CHECK_FALSE(thm4_dim(make(7, 2, 7, 2, 1)).has_value());  // rho != 0
}

TEST_CASE("emptiness corollary") {
    CHECK(cor5_empty(make(12, 5, 15, 4, 1)));
    CHECK_FALSE(cor5_empty(make(10, 4, 12, 4, 1)));
    CHECK(cor5_empty(make(21, 6, 24, 6, 2)));
    // Guards mirror the rho-zero emptiness cases.
    CHECK_FALSE(cor5_empty(make(7, 2, 7, 2, 1)));
    CHECK_FALSE(cor5_empty(make(3, 2, 4, 3, 2)));   // s = 1
    CHECK_FALSE(cor5_empty(make(18, 8, 24, 3, 0))); // f = 0
}

TEST_CASE("corollary firing forces a negative theorem value") {
    for (Int g = 1; g <= 16; ++g) {
        for (Int r = 0; r <= 7; ++r) {
            for (Int d = r; d <= 2 * g - 2 + r; ++d) {
                for (Int e = 1; e <= std::min<Int>(10, d); ++e) {
                    for (Int f = 0; f < e; ++f) {
                        const SecantProblem P(SeriesParams(g, r, d), e, f);
                        if (!cor5_empty(P)) continue;
                        const auto dim = thm4_dim(P);
                        REQUIRE(dim.has_value());
                        REQUIRE(*dim < 0);
                        REQUIRE(thm1_empty(P).has_value());
                    }
                }
            }
        }
    }
}
