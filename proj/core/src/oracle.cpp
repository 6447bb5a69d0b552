#include "secantry/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "secantry/dejonq.hpp"

namespace secantry {

namespace {

void check_degeneration_hypotheses(const SecantProblem& P, const char* op) {
    if (P.base.rho() != 0) throw std::domain_error(std::string(op) + ": requires rho = 0");
    if (P.base.speciality() < 2) throw std::domain_error(std::string(op) + ": requires speciality >= 2");
    if (P.r_prime() < 0) throw std::domain_error(std::string(op) + ": requires r - e + f >= 0");
}

}  // namespace

std::vector<DegreeDistribution> admissible_distributions(const SecantProblem& P) {
    check_degeneration_hypotheses(P, "admissible_distributions");
    const Int r = P.base.r;
    const Int d = P.base.d;
    const Int e = P.e;
    std::vector<DegreeDistribution> out;
    for (Int d1 = 0; d1 <= e; ++d1) {
        const Int d2 = e - d1;
        for (Int d1p = 0; d1p <= d - e; ++d1p) {
            const Int d2p = d - e - d1p;
            const Int c1 = d - r - e - d1p;
            const Int c2 = 2 * r - e - d2p;
            if (c1 < 0 || c2 < 0) continue;
            if (d1 + d1p < d - 2 * r || d1 + d1p > d - r) continue;
            if (d2 + d2p < r || d2 + d2p > 2 * r) continue;
            out.push_back({d1, d1p, d2, d2p, c1, c2});
        }
    }
    return out;
}

BasePointReport base_point_report(const SecantProblem& P) {
    const auto dists = admissible_distributions(P);
    BasePointReport report;
    report.admissible_count = dists.size();
    for (const auto& dist : dists) {
        if (dist.c1 == 0 || dist.c2 == 0) report.witnesses.push_back(dist);
    }
    report.holds_everywhere = report.witnesses.empty();
    return report;
}

bool both_nonpositive_possible(const SecantProblem& P) {
    check_degeneration_hypotheses(P, "both_nonpositive_possible");
    const Int r = P.base.r;
    const Int d = P.base.d;
    const Int e = P.e;
    for (Int d1p = 0; d1p <= d - e; ++d1p) {
        const Int d2p = d - e - d1p;
        if (d - r - e - d1p <= 0 && 2 * r - e - d2p <= 0) return true;
    }
    return false;
}

ComponentDJDims component_dj_dims(const SecantProblem& P, SFactorReading reading) {
    check_degeneration_hypotheses(P, "component_dj_dims");
    const Int expdim = expected_secant_dim(P);
    const Int s = P.base.speciality();
    const Int rp = P.r_prime();
    const Int factor = reading == SFactorReading::Printed ? rp + 1 : rp;
    ComponentDJDims dims;
    dims.first = expdim - (s - 2) * factor;
    dims.second = expdim;
    // The node is a base point of both residual aspects, forcing
    // alpha = (1, ..., 1) of length r'+1 on each.
    dims.first_ram = dims.first - (rp + 1);
    dims.second_ram = dims.second - (rp + 1);
    return dims;
}

CentralFiberBound central_fiber_bound(const SecantProblem& P) {
    check_degeneration_hypotheses(P, "central_fiber_bound");
    const Int expdim = expected_secant_dim(P);
    const Int s = P.base.speciality();
    const Int rp = P.r_prime();
    const auto ram = component_dj_dims(P, SFactorReading::RPrime);
    CentralFiberBound bound;
    bound.printed = 2 * expdim - s * rp;
    bound.derived = ram.first_ram + ram.second_ram;
    return bound;
}

bool thm4_via_degeneration(const SecantProblem& P) {
    check_degeneration_hypotheses(P, "thm4_via_degeneration");
    if (P.e >= 2 * P.base.r) throw std::domain_error("thm4_via_degeneration: requires e < 2r");
    if (expected_secant_dim(P) > P.r_prime() + 2) {
        throw std::domain_error("thm4_via_degeneration: requires expected dimension <= r-e+f+2");
    }
    const auto bound = central_fiber_bound(P);
    return std::min(bound.printed, bound.derived) <= dj_ef_expected(P);
}

}  // namespace secantry
