#pragma once

#include <cstddef>
#include <vector>

#include "secantry/secant.hpp"

namespace secantry {

/// A split of deg D = e and deg D' = d-e across the two components of the
/// degeneration, with the node coefficients it forces on the two residual
/// aspects: c1 = d-r-e-d1p, c2 = 2r-e-d2p.
struct DegreeDistribution {
    Int d1 = 0;
    Int d1p = 0;
    Int d2 = 0;
    Int d2p = 0;
    Int c1 = 0;
    Int c2 = 0;

    friend bool operator==(const DegreeDistribution&, const DegreeDistribution&) = default;
};

/// Exhaustive list of the splits compatible with every constraint:
/// d1+d2 = e, d1p+d2p = d-e, c1 >= 0, c2 >= 0, d-2r <= d1+d1p <= d-r,
/// r <= d2+d2p <= 2r.  Ordered lexicographically by (d1, d1p).
/// Requires rho = 0, s >= 2, r' >= 0 (the degeneration hypotheses).
std::vector<DegreeDistribution> admissible_distributions(const SecantProblem& P);

/// Measurement of the claim that the node coefficient in both residual
/// aspects is strictly positive.  Never assumed; witnesses with c1 = 0 or
/// c2 = 0 are listed.  Vacuously true on an empty admissible set.
struct BasePointReport {
    bool holds_everywhere = true;
    std::vector<DegreeDistribution> witnesses;
    std::size_t admissible_count = 0;
};

BasePointReport base_point_report(const SecantProblem& P);

/// Can both node coefficients be nonpositive for some raw split (sum
/// constraints only)?  Algebraically possible exactly when r <= e, since
/// c1 + c2 = r - e.
bool both_nonpositive_possible(const SecantProblem& P);

/// The (s-2) factor in the first component's dimension has two readings:
/// Printed uses (r+1-e+f), RPrime uses (r-e+f) as the induction pattern
/// suggests.  Both are computed; Printed is the default.
enum class SFactorReading { Printed, RPrime };

struct ComponentDJDims {
    Int first = 0;        // e - f(r+1-e+f) - (s-2) * factor
    Int second = 0;       // e - f(r+1-e+f)
    Int first_ram = 0;    // with the forced full base point alpha = (1,...,1)
    Int second_ram = 0;   //   i.e. each reduced by r'+1
};

ComponentDJDims component_dj_dims(const SecantProblem& P,
                                  SFactorReading reading = SFactorReading::Printed);

/// Upper bound for the central-fibre space:
/// printed = 2(e - f(r+1-e+f)) - s(r-e+f) as displayed, and
/// derived = sum of the two ramified component dimensions under the RPrime
/// reading, which is printed - 2 identically.  Both are first-class.
struct CentralFiberBound {
    Int printed = 0;
    Int derived = 0;
};

CentralFiberBound central_fiber_bound(const SecantProblem& P);

/// Induction-step closure: min(printed, derived) <= dj_ef_expected.
/// Requires the dimension-theorem hypotheses (rho = 0, s >= 2, r' >= 0,
/// expected dimension <= r'+2, e < 2r).
bool thm4_via_degeneration(const SecantProblem& P);

}  // namespace secantry
