#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "secantry/bn.hpp"

namespace secantry {

/// One classification instance: the ambient series plus the secant data.
/// A degree-e divisor is asked to impose at most e-f conditions on the
/// series; r' = r-e+f is the dimension the residual series must reach.
struct SecantProblem {
    SeriesParams base;
    Int e = 1;
    Int f = 0;

    SecantProblem() = default;
    SecantProblem(SeriesParams base, Int e, Int f);  // requires 1 <= e <= d, 0 <= f < e

    Int r_prime() const noexcept { return base.r - e + f; }
    Int d_prime() const noexcept { return base.d - e; }
    Int s_prime() const noexcept { return base.speciality() + f; }

    friend bool operator==(const SecantProblem&, const SecantProblem&) = default;
};

/// e - f(r+1-e+f).  Negative values are meaningful, not an error.
Int expected_secant_dim(const SecantProblem& P) noexcept;

/// The two routes to the secant count: the direct expected dimension (lhs)
/// and the Brill-Noether bookkeeping route
/// rho(g, r', d') - rho(g, r, d) - (e-f)(s-1) (rhs).  The two differ in
/// general; the gap is tracked as a regression quantity, and no emptiness
/// conclusion is ever drawn from it.
struct Eq2Sides {
    Int lhs = 0;
    Int rhs = 0;
    Int gap() const noexcept { return lhs - rhs; }
};

/// Requires r' >= 0; throws std::domain_error below that range.
Eq2Sides eq2_sides(const SecantProblem& P);

/// Emptiness for every series of the given type on a general curve:
/// expected dimension < -rho.
bool farkas_empty(const SecantProblem& P) noexcept;

/// Coppens-Martens non-emptiness for any curve and series: d >= 2e-1 and
/// expected dimension >= r-e+f.  Stated for r' >= 0; false below that range.
bool cm_nonempty(const SecantProblem& P) noexcept;

enum class Thm1Case { I, II };

/// Emptiness on a general curve for rho = 0, stratified by speciality:
/// case I for s = 2, case II for s >= 3.  Fires only for f >= 1, e < 2r and
/// expected dimension strictly below the Coppens-Martens threshold r-e+f,
/// so it can never contradict cm_nonempty.  Non-applicability is absent.
std::optional<Thm1Case> thm1_empty(const SecantProblem& P) noexcept;

/// The two-parameter family of empty secant problems with expected
/// dimension zero: f = e/2, r = f+1, s = 2, g = rho + 2(r+1), d = g+r-2.
/// Requires e even and >= 2, rho_target >= 0.
SecantProblem prop1_family(Int e, Int rho_target);

/// O(1) membership test inverting the family equations.
bool prop1_member(const SecantProblem& P) noexcept;

enum class VerdictTag {
    EmptyFarkas,
    EmptyProp1,
    EmptyThm1i,
    EmptyThm1ii,
    NonEmptyCM,
    NonEmptyTrivial,
    Undetermined,
    Conflict,
};

enum class Rule { Farkas, Thm1i, Thm1ii, Prop1, Cor5, CM, Trivial };

std::string_view to_string(VerdictTag tag) noexcept;
std::string_view to_string(Rule rule) noexcept;

struct Verdict {
    VerdictTag tag = VerdictTag::Undetermined;
    std::vector<Rule> notes;  // every rule that fired, in fixed listing order

    bool fired(Rule rule) const noexcept;
};

/// Tag derived from a fired-rule set alone.  Conflict iff both an emptiness
/// and a non-emptiness rule fired; otherwise fixed precedence
/// Farkas > Prop1 > Thm1i > Thm1ii > CM > Trivial > Undetermined.
/// Cor5 counts as an emptiness rule but carries no tag of its own (it fires
/// exactly when a Thm1 case does).
VerdictTag verdict_tag_for(const std::vector<Rule>& fired) noexcept;

/// Fires every applicable rule and resolves the tag.  Non-emptiness rules
/// presuppose that a series of the given type exists on a general curve,
/// i.e. rho >= 0.
Verdict classify(const SecantProblem& P);

struct SweepBounds {
    Int g_max = 0;
    Int r_max = 0;
    Int d_max = 0;
    Int e_max = 0;
};

/// All valid (g, r, d, e, f) tuples within bounds, lexicographic.
/// All bounds must be positive.
std::vector<SecantProblem> enumerate_problems(const SweepBounds& bounds);

/// enumerate_problems + classify, in the same deterministic order.
std::vector<std::pair<SecantProblem, Verdict>> sweep(const SweepBounds& bounds);

}  // namespace secantry
