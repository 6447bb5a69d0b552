#include "secantry/secant.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "secantry/dejonq.hpp"

namespace secantry {

SecantProblem::SecantProblem(SeriesParams base_, Int e_, Int f_) : base(base_), e(e_), f(f_) {
    if (e < 1) throw std::invalid_argument("SecantProblem: e must be positive");
    if (f < 0 || f >= e) throw std::invalid_argument("SecantProblem: need 0 <= f < e");
    if (e > base.d) throw std::invalid_argument("SecantProblem: need e <= d");
}

Int expected_secant_dim(const SecantProblem& P) noexcept {
    return P.e - P.f * (P.base.r + 1 - P.e + P.f);
}

Eq2Sides eq2_sides(const SecantProblem& P) {
    if (P.r_prime() < 0) {
        throw std::domain_error("eq2_sides: requires r - e + f >= 0");
    }
    const SeriesParams& b = P.base;
    Eq2Sides out;
    out.lhs = expected_secant_dim(P);
    out.rhs = rho_value(b.g, P.r_prime(), P.d_prime()) - b.rho() - (P.e - P.f) * (b.speciality() - 1);
    return out;
}

bool farkas_empty(const SecantProblem& P) noexcept {
    return expected_secant_dim(P) < -P.base.rho();
}

bool cm_nonempty(const SecantProblem& P) noexcept {
    if (P.r_prime() < 0) return false;
    return P.base.d >= 2 * P.e - 1 && expected_secant_dim(P) >= P.r_prime();
}

std::optional<Thm1Case> thm1_empty(const SecantProblem& P) noexcept {
    const Int rp = P.r_prime();
    if (P.base.rho() != 0 || rp < 0) return std::nullopt;
    // At f = 0 every degree-e divisor imposes at most e conditions, so the
    // secant variety is all of C_e and no emptiness statement applies.
    if (P.f == 0) return std::nullopt;
    if (P.e >= 2 * P.base.r) return std::nullopt;
    const Int expdim = expected_secant_dim(P);
    // Emptiness is only concluded strictly below the Coppens-Martens
    // threshold r-e+f; at or above it the non-emptiness bound takes over.
    if (expdim >= rp) return std::nullopt;
    const Int s = P.base.speciality();
    if (s == 2) return Thm1Case::I;
    if (s >= 3 && expdim < std::min(rp + 2, (s - 1) * rp)) return Thm1Case::II;
    return std::nullopt;
}

SecantProblem prop1_family(Int e, Int rho_target) {
    if (e < 2 || e % 2 != 0) throw std::invalid_argument("prop1_family: e must be even and >= 2");
    if (rho_target < 0) throw std::invalid_argument("prop1_family: rho must be nonnegative");
    const Int f = e / 2;
    const Int r = f + 1;
    const Int g = rho_target + 2 * (r + 1);
    const Int d = g + r - 2;
    return SecantProblem(SeriesParams(g, r, d), e, f);
}

bool prop1_member(const SecantProblem& P) noexcept {
    if (P.e < 2 || P.e % 2 != 0) return false;
    if (P.f != P.e / 2) return false;
    if (P.base.r != P.f + 1) return false;
    if (P.base.speciality() != 2) return false;
    return P.base.rho() >= 0;
}

std::string_view to_string(VerdictTag tag) noexcept {
    switch (tag) {
        case VerdictTag::EmptyFarkas: return "EmptyFarkas";
        case VerdictTag::EmptyProp1: return "EmptyProp1";
        case VerdictTag::EmptyThm1i: return "EmptyThm1i";
        case VerdictTag::EmptyThm1ii: return "EmptyThm1ii";
        case VerdictTag::NonEmptyCM: return "NonEmptyCM";
        case VerdictTag::NonEmptyTrivial: return "NonEmptyTrivial";
        case VerdictTag::Undetermined: return "Undetermined";
        case VerdictTag::Conflict: return "Conflict";
    }
    return "Unknown";
}

std::string_view to_string(Rule rule) noexcept {
    switch (rule) {
        case Rule::Farkas: return "farkas";
        case Rule::Thm1i: return "thm1i";
        case Rule::Thm1ii: return "thm1ii";
        case Rule::Prop1: return "prop1";
        case Rule::Cor5: return "cor5";
        case Rule::CM: return "cm";
        case Rule::Trivial: return "trivial";
    }
    return "unknown";
}

bool Verdict::fired(Rule rule) const noexcept {
    return std::find(notes.begin(), notes.end(), rule) != notes.end();
}

VerdictTag verdict_tag_for(const std::vector<Rule>& fired) noexcept {
    const auto has = [&](Rule r) { return std::find(fired.begin(), fired.end(), r) != fired.end(); };
    const bool empty_fired =
        has(Rule::Farkas) || has(Rule::Thm1i) || has(Rule::Thm1ii) || has(Rule::Prop1) || has(Rule::Cor5);
    const bool nonempty_fired = has(Rule::CM) || has(Rule::Trivial);
    if (empty_fired && nonempty_fired) return VerdictTag::Conflict;
    if (has(Rule::Farkas)) return VerdictTag::EmptyFarkas;
    if (has(Rule::Prop1)) return VerdictTag::EmptyProp1;
    if (has(Rule::Thm1i)) return VerdictTag::EmptyThm1i;
    if (has(Rule::Thm1ii)) return VerdictTag::EmptyThm1ii;
    if (has(Rule::CM)) return VerdictTag::NonEmptyCM;
    if (has(Rule::Trivial)) return VerdictTag::NonEmptyTrivial;
    return VerdictTag::Undetermined;
}

Verdict classify(const SecantProblem& P) {
    Verdict v;
    if (farkas_empty(P)) v.notes.push_back(Rule::Farkas);
    if (const auto t1 = thm1_empty(P)) {
        v.notes.push_back(*t1 == Thm1Case::I ? Rule::Thm1i : Rule::Thm1ii);
    }
    if (prop1_member(P)) v.notes.push_back(Rule::Prop1);
    if (cor5_empty(P)) v.notes.push_back(Rule::Cor5);
    // Non-emptiness statements presume a series of the given type exists on
    // a general curve, i.e. rho >= 0.
    if (P.base.rho() >= 0) {
        if (cm_nonempty(P)) v.notes.push_back(Rule::CM);
        if (P.f == 0 || P.r_prime() < 0) v.notes.push_back(Rule::Trivial);
    }
    v.tag = verdict_tag_for(v.notes);
    return v;
}

std::vector<SecantProblem> enumerate_problems(const SweepBounds& bounds) {
    if (bounds.g_max < 1 || bounds.r_max < 1 || bounds.d_max < 1 || bounds.e_max < 1) {
        throw std::invalid_argument("enumerate_problems: all bounds must be positive");
    }
    std::vector<SecantProblem> out;
    for (Int g = 0; g <= bounds.g_max; ++g) {
        for (Int r = 0; r <= bounds.r_max; ++r) {
            for (Int d = r; d <= bounds.d_max; ++d) {
                const Int e_top = std::min(bounds.e_max, d);
                for (Int e = 1; e <= e_top; ++e) {
                    for (Int f = 0; f < e; ++f) {
                        out.emplace_back(SeriesParams(g, r, d), e, f);
                    }
                }
            }
        }
    }
    return out;
}

std::vector<std::pair<SecantProblem, Verdict>> sweep(const SweepBounds& bounds) {
    std::vector<std::pair<SecantProblem, Verdict>> out;
    for (const SecantProblem& P : enumerate_problems(bounds)) {
        out.emplace_back(P, classify(P));
    }
    return out;
}

}  // namespace secantry
