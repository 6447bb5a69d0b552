#include <array>
#include <stdexcept>

#include "doctest.h"
#include "secantry/secant.hpp"

using namespace secantry;

namespace {

SecantProblem make(Int g, Int r, Int d, Int e, Int f) {
    return SecantProblem(SeriesParams(g, r, d), e, f);
}

}  // namespace

TEST_CASE("secant problem validation") {
    CHECK_THROWS_AS(make(12, 5, 15, 0, 0), std::invalid_argument);   // e < 1
    CHECK_THROWS_AS(make(12, 5, 15, 4, 4), std::invalid_argument);   // f >= e
    CHECK_THROWS_AS(make(12, 5, 15, 16, 1), std::invalid_argument);  // e > d
    const SecantProblem P = make(12, 5, 15, 4, 1);
    CHECK(P.r_prime() == 2);
    CHECK(P.d_prime() == 11);
    CHECK(P.s_prime() == 3);
}

TEST_CASE("expected secant dimension") {
    CHECK(expected_secant_dim(make(12, 5, 15, 4, 1)) == 1);
    CHECK(expected_secant_dim(make(7, 2, 7, 2, 1)) == 0);
    CHECK(expected_secant_dim(make(12, 5, 15, 4, 2)) == -4);
    // f = 0 always gives e.
    for (Int e = 1; e <= 8; ++e) CHECK(expected_secant_dim(make(10, 4, 12, e, 0)) == e);
}

TEST_CASE("two-route count and its gap") {
    const Eq2Sides a = eq2_sides(make(12, 5, 15, 4, 1));
    CHECK(a.lhs == 1);
    CHECK(a.rhs == 0);
    CHECK(a.gap() == 1);
    const Eq2Sides b = eq2_sides(make(7, 2, 7, 2, 1));
    CHECK(b.lhs == 0);
    CHECK(b.rhs == -1);
    CHECK(b.gap() == 1);
    // f = 0 and s = 1: both routes reduce to e.
    const Eq2Sides c = eq2_sides(make(4, 3, 6, 2, 0));
    CHECK(c.lhs == c.rhs);
    CHECK(c.gap() == 0);
    CHECK_THROWS_AS(eq2_sides(make(12, 5, 15, 8, 1)), std::domain_error);  // r' < 0
}

TEST_CASE("farkas emptiness") {
    CHECK(farkas_empty(make(12, 5, 15, 4, 2)));
    CHECK_FALSE(farkas_empty(make(12, 5, 15, 4, 1)));
    CHECK_FALSE(farkas_empty(make(7, 2, 7, 2, 1)));
}

TEST_CASE("coppens-martens non-emptiness") {
    CHECK(cm_nonempty(make(12, 5, 15, 5, 1)));
    CHECK_FALSE(cm_nonempty(make(12, 5, 15, 4, 1)));
    CHECK(cm_nonempty(make(4, 1, 3, 1, 0)));
    CHECK_FALSE(cm_nonempty(make(12, 5, 15, 8, 1)));  // r' < 0
}

TEST_CASE("rho-zero emptiness cases") {
    CHECK(thm1_empty(make(12, 5, 15, 4, 1)) == Thm1Case::I);
    CHECK(thm1_empty(make(21, 6, 24, 6, 2)) == Thm1Case::II);
    CHECK_FALSE(thm1_empty(make(12, 5, 15, 5, 1)).has_value());
    // Hypothesis guards: rho must vanish, f must be positive.
    CHECK_FALSE(thm1_empty(make(7, 2, 7, 2, 1)).has_value());
    CHECK_FALSE(thm1_empty(make(18, 8, 24, 3, 0)).has_value());
    // Never fires at or above the non-emptiness threshold.
    CHECK_FALSE(thm1_empty(make(12, 3, 12, 3, 1)).has_value());
    CHECK(cm_nonempty(make(12, 3, 12, 3, 1)));
}

TEST_CASE("family generation") {
    CHECK(prop1_family(2, 1) == make(7, 2, 7, 2, 1));
    CHECK(prop1_family(4, 0) == make(8, 3, 9, 4, 2));
    CHECK(prop1_family(2, 0) == make(6, 2, 6, 2, 1));
    CHECK_THROWS_AS(prop1_family(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(prop1_family(2, -1), std::invalid_argument);
}

TEST_CASE("family guarantees, exhaustive for e <= 20, rho <= 10") {
    for (Int e = 2; e <= 20; e += 2) {
        for (Int rho_target = 0; rho_target <= 10; ++rho_target) {
            const SecantProblem P = prop1_family(e, rho_target);
            REQUIRE(expected_secant_dim(P) == 0);
            REQUIRE(P.base.speciality() == 2);
            REQUIRE(P.r_prime() == 1);
            REQUIRE(P.base.rho() == rho_target);
            REQUIRE(rho_value(P.base.g, P.r_prime(), P.d_prime()) == rho_target);
            REQUIRE_FALSE(cm_nonempty(P));
            REQUIRE_FALSE(farkas_empty(P));
            REQUIRE(prop1_member(P));
        }
    }
}

TEST_CASE("family membership is the inverse of generation") {
    CHECK(prop1_member(make(8, 3, 9, 4, 2)));
    CHECK(prop1_member(make(7, 2, 7, 2, 1)));
    CHECK_FALSE(prop1_member(make(12, 5, 15, 4, 1)));  // f != e/2
    CHECK_FALSE(prop1_member(make(12, 5, 15, 4, 2)));  // r != f+1
    CHECK_FALSE(prop1_member(make(9, 3, 9, 4, 2)));    // s != 2
}

TEST_CASE("verdict precedence table") {
    CHECK(verdict_tag_for({}) == VerdictTag::Undetermined);
    CHECK(verdict_tag_for({Rule::Farkas}) == VerdictTag::EmptyFarkas);
    CHECK(verdict_tag_for({Rule::Farkas, Rule::Thm1i}) == VerdictTag::EmptyFarkas);
    CHECK(verdict_tag_for({Rule::Thm1i, Rule::Prop1, Rule::Cor5}) == VerdictTag::EmptyProp1);
    CHECK(verdict_tag_for({Rule::Thm1i, Rule::Cor5}) == VerdictTag::EmptyThm1i);
    CHECK(verdict_tag_for({Rule::Thm1ii, Rule::Cor5}) == VerdictTag::EmptyThm1ii);
    CHECK(verdict_tag_for({Rule::CM, Rule::Trivial}) == VerdictTag::NonEmptyCM);
    CHECK(verdict_tag_for({Rule::Trivial}) == VerdictTag::NonEmptyTrivial);
    CHECK(verdict_tag_for({Rule::Farkas, Rule::CM}) == VerdictTag::Conflict);
    CHECK(verdict_tag_for({Rule::Cor5, Rule::Trivial}) == VerdictTag::Conflict);
}

TEST_CASE("classification of anchored tuples") {
    const Verdict a = classify(make(12, 5, 15, 4, 1));
    CHECK(a.tag == VerdictTag::EmptyThm1i);
    CHECK(a.fired(Rule::Thm1i));
    CHECK(a.fired(Rule::Cor5));
    CHECK_FALSE(a.fired(Rule::CM));

    const Verdict b = classify(make(12, 5, 15, 5, 1));
    CHECK(b.tag == VerdictTag::NonEmptyCM);

    const Verdict c = classify(make(8, 3, 9, 4, 2));
    CHECK(c.tag == VerdictTag::EmptyProp1);
    CHECK(c.fired(Rule::Prop1));
    CHECK(c.fired(Rule::Thm1i));

    const Verdict d = classify(make(4, 1, 3, 1, 0));
    CHECK(d.tag == VerdictTag::NonEmptyCM);
    REQUIRE(d.notes.size() == 2);
    CHECK(d.notes[0] == Rule::CM);
    CHECK(d.notes[1] == Rule::Trivial);

    // rho < 0: no series exists on a general curve, so non-emptiness rules
    // stay silent and Farkas may conclude vacuous emptiness.
    const Verdict e = classify(make(10, 1, 1, 1, 0));
    CHECK(e.tag == VerdictTag::EmptyFarkas);
    CHECK_FALSE(e.fired(Rule::CM));
    CHECK_FALSE(e.fired(Rule::Trivial));
}

TEST_CASE("sweep contains the worked examples in lexicographic order") {
    const auto rows = sweep({12, 5, 15, 5});
    REQUIRE(!rows.empty());
    bool saw_thm1i = false;
    bool saw_cm = false;
    for (const auto& [P, v] : rows) {
        if (P == make(12, 5, 15, 4, 1)) {
            saw_thm1i = v.tag == VerdictTag::EmptyThm1i;
        }
        if (P == make(12, 5, 15, 5, 1)) {
            saw_cm = v.tag == VerdictTag::NonEmptyCM;
        }
        CHECK(v.tag != VerdictTag::Conflict);
    }
    CHECK(saw_thm1i);
    CHECK(saw_cm);

    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto key = [](const SecantProblem& P) {
            return std::array<Int, 5>{P.base.g, P.base.r, P.base.d, P.e, P.f};
        };
        CHECK(key(rows[i - 1].first) < key(rows[i].first));
    }
}

TEST_CASE("sweep picks up the family and the trivial cases") {
    bool saw_prop1 = false;
    for (const auto& [P, v] : sweep({7, 2, 7, 2})) {
        if (P == make(7, 2, 7, 2, 1)) saw_prop1 = v.tag == VerdictTag::EmptyProp1;
    }
    CHECK(saw_prop1);

    bool saw_trivial = false;
    for (const auto& [P, v] : sweep({4, 1, 3, 1})) {
        if (P == make(4, 1, 3, 1, 0)) {
            saw_trivial = v.tag == VerdictTag::NonEmptyCM || v.tag == VerdictTag::NonEmptyTrivial;
            CHECK(v.notes.front() == Rule::CM);
        }
    }
    CHECK(saw_trivial);
}

TEST_CASE("sweep bounds must be positive") {
    CHECK_THROWS_AS(enumerate_problems({0, 5, 15, 5}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_problems({12, 5, 15, 0}), std::invalid_argument);
}

TEST_CASE("sweep is deterministic") {
    const auto a = sweep({8, 4, 10, 4});
    const auto b = sweep({8, 4, 10, 4});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].first == b[i].first);
        CHECK(a[i].second.tag == b[i].second.tag);
        CHECK(a[i].second.notes == b[i].second.notes);
    }
}
