#pragma once

#include <string>
#include <vector>

#include "secantry/bn.hpp"

namespace secantry {

/// Bounds for the exhaustive property sweep.  The degree ranges over
/// r <= d <= 2g-2+r for each (g, r).
struct VerifyBounds {
    Int g_max = 20;
    Int r_max = 8;
    Int e_max = 12;
};

/// Soundness checks must pass on a correct implementation; findings are
/// measurements of where the printed formulas disagree with the derived
/// ones and never fail.
enum class CheckKind { Soundness, Finding };

struct CheckResult {
    std::string name;
    CheckKind kind = CheckKind::Soundness;
    bool passed = true;
    std::string detail;  // case count, first counterexample, or measurement
};

std::vector<CheckResult> verify_all(const VerifyBounds& bounds = {});

bool all_sound(const std::vector<CheckResult>& results) noexcept;

}  // namespace secantry
