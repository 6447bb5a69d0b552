#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "secantry/secant.hpp"

namespace secantry {

/// One classified tuple in the fixed column order.  eq2_gap and dj_expected
/// are only defined for r' >= 0 (empty CSV field / JSON null otherwise).
struct SweepRow {
    Int g = 0, r = 0, d = 0, e = 0, f = 0;
    Int rho = 0, s = 0, expdim = 0, r_prime = 0;
    VerdictTag verdict = VerdictTag::Undetermined;
    std::vector<Rule> rules;
    std::optional<Int> eq2_gap;
    std::optional<Int> dj_expected;
};

inline constexpr std::string_view kSweepCsvHeader =
    "g,r,d,e,f,rho,s,expdim,r_prime,verdict,rules,eq2_gap,dj_expected";

SweepRow make_sweep_row(const SecantProblem& P, const Verdict& v);
std::vector<SweepRow> sweep_rows(const SweepBounds& bounds);

std::string rules_string(const std::vector<Rule>& rules);  // semicolon-joined

void write_csv(std::ostream& os, std::span<const SweepRow> rows);
void write_json(std::ostream& os, std::span<const SweepRow> rows);

}  // namespace secantry
