#include "secantry/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "secantry/dejonq.hpp"
#include "secantry/limit_series.hpp"
#include "secantry/oracle.hpp"
#include "secantry/secant.hpp"

namespace secantry {

namespace {

std::string series_str(const SeriesParams& p) {
    std::ostringstream os;
    os << "(" << p.g << "," << p.r << "," << p.d << ")";
    return os.str();
}

std::string tuple_str(const SecantProblem& P) {
    std::ostringstream os;
    os << "(" << P.base.g << "," << P.base.r << "," << P.base.d << "," << P.e << "," << P.f << ")";
    return os.str();
}

// Tracks the first counterexample; later ones are ignored.
struct Tally {
    long long cases = 0;
    bool ok = true;
    std::string first_fail;

    void fail(const std::string& what) {
        if (ok) {
            ok = false;
            first_fail = what;
        }
    }

    CheckResult result(std::string name) const {
        CheckResult res;
        res.name = std::move(name);
        res.kind = CheckKind::Soundness;
        res.passed = ok;
        res.detail = ok ? std::to_string(cases) + " cases"
                        : "first counterexample: " + first_fail;
        return res;
    }
};

CheckResult finding(std::string name, std::string detail) {
    CheckResult res;
    res.name = std::move(name);
    res.kind = CheckKind::Finding;
    res.passed = true;
    res.detail = std::move(detail);
    return res;
}

// Series domain: 0 <= r <= r_max, r <= d <= 2g-2+r.  Genus 0 contributes
// nothing since 2g-2+r < r there.
template <typename F>
void for_each_series(const VerifyBounds& b, F&& fn) {
    for (Int g = 0; g <= b.g_max; ++g) {
        for (Int r = 0; r <= b.r_max; ++r) {
            for (Int d = r; d <= 2 * g - 2 + r; ++d) {
                fn(SeriesParams(g, r, d));
            }
        }
    }
}

template <typename F>
void for_each_problem(const VerifyBounds& b, F&& fn) {
    for_each_series(b, [&](const SeriesParams& p) {
        const Int e_top = std::min(b.e_max, p.d);
        for (Int e = 1; e <= e_top; ++e) {
            for (Int f = 0; f < e; ++f) {
                fn(SecantProblem(p, e, f));
            }
        }
    });
}

bool degeneration_applicable(const SecantProblem& P) {
    return P.base.rho() == 0 && P.base.speciality() >= 2 && P.r_prime() >= 0;
}

CheckResult check_residual_rho_symmetry(const VerifyBounds& b) {
    Tally t;
    for_each_series(b, [&](const SeriesParams& p) {
        const Int s = p.speciality();
        if (s < 1) return;
        if (s - 1 > 2 * p.g - 2 - p.d) return;  // residual type not representable
        ++t.cases;
        const SeriesParams res = residual(p);
        if (res.rho() != p.rho()) t.fail(series_str(p) + " -> " + series_str(res));
    });
    return t.result("residual_rho_symmetry");
}

CheckResult check_residual_involution(const VerifyBounds& b) {
    Tally t;
    for_each_series(b, [&](const SeriesParams& p) {
        const Int s = p.speciality();
        if (s < 1 || s - 1 > 2 * p.g - 2 - p.d) return;
        ++t.cases;
        if (residual(residual(p)) != p) t.fail(series_str(p));
    });
    return t.result("residual_involution");
}

CheckResult check_ramification_roundtrip() {
    Tally t;
    // Exhaustive over 0 <= a_0 < ... < a_r <= d for d <= 10, r <= 4.
    for (Int d = 0; d <= 10; ++d) {
        for (Int r = 0; r <= std::min<Int>(4, d); ++r) {
            std::vector<Int> a(static_cast<std::size_t>(r) + 1);
            for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<Int>(i);
            while (true) {
                ++t.cases;
                VanishingSequence seq(a, d);
                const auto back = vanishing_from_ramification(ramification_from_vanishing(seq));
                if (back != seq) t.fail("d=" + std::to_string(d) + " sequence roundtrip");
                std::size_t i = a.size();
                bool advanced = false;
                while (i > 0) {
                    --i;
                    const Int limit = d - static_cast<Int>(a.size() - 1 - i);
                    if (a[i] < limit) {
                        ++a[i];
                        for (std::size_t j = i + 1; j < a.size(); ++j) a[j] = a[j - 1] + 1;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) break;
            }
        }
    }
    return t.result("ramification_vanishing_roundtrip");
}

CheckResult check_rho_degree_step(const VerifyBounds& b) {
    Tally t;
    for_each_series(b, [&](const SeriesParams& p) {
        ++t.cases;
        if (rho_value(p.g, p.r, p.d + 1) - p.rho() != p.r + 1) t.fail(series_str(p));
    });
    return t.result("rho_degree_step");
}

CheckResult check_prop1_family() {
    Tally t;
    for (Int e = 2; e <= 20; e += 2) {
        for (Int rho_target = 0; rho_target <= 10; ++rho_target) {
            ++t.cases;
            const SecantProblem P = prop1_family(e, rho_target);
            const std::string where = tuple_str(P);
            if (expected_secant_dim(P) != 0) { t.fail(where + " expdim"); continue; }
            if (P.base.speciality() != 2) { t.fail(where + " speciality"); continue; }
            if (P.r_prime() != 1) { t.fail(where + " r'"); continue; }
            if (P.base.rho() != rho_target) { t.fail(where + " rho"); continue; }
            if (rho_value(P.base.g, P.r_prime(), P.d_prime()) != rho_target) {
                t.fail(where + " residual rho");
                continue;
            }
            if (farkas_empty(P) || cm_nonempty(P)) { t.fail(where + " criteria applicability"); continue; }
            if (!prop1_member(P)) { t.fail(where + " membership"); continue; }
            if (classify(P).tag != VerdictTag::EmptyProp1) t.fail(where + " verdict");
        }
    }
    return t.result("prop1_family_guarantees");
}

CheckResult check_sweep_conflicts(const VerifyBounds& b, long long& undetermined_nonneg) {
    Tally t;
    undetermined_nonneg = 0;
    for_each_problem(b, [&](const SecantProblem& P) {
        ++t.cases;
        const Verdict v = classify(P);
        if (v.tag == VerdictTag::Conflict) t.fail(tuple_str(P));
        if (v.tag == VerdictTag::Undetermined && expected_secant_dim(P) >= 0) ++undetermined_nonneg;
    });
    return t.result("sweep_zero_conflicts");
}

CheckResult check_f_zero(const VerifyBounds& b) {
    Tally t;
    for_each_problem(b, [&](const SecantProblem& P) {
        if (P.f != 0) return;
        ++t.cases;
        if (expected_secant_dim(P) != P.e) { t.fail(tuple_str(P) + " expdim != e"); return; }
        // With f = 0 the non-emptiness bound reads e >= r - e.
        const bool cm_expected = P.r_prime() >= 0 && P.base.d >= 2 * P.e - 1 && 2 * P.e >= P.base.r;
        if (cm_nonempty(P) != cm_expected) { t.fail(tuple_str(P) + " cm"); return; }
        if (P.base.rho() >= 0) {
            const Verdict v = classify(P);
            if (v.tag != VerdictTag::NonEmptyCM && v.tag != VerdictTag::NonEmptyTrivial) {
                t.fail(tuple_str(P) + " verdict " + std::string(to_string(v.tag)));
            }
        }
    });
    return t.result("f_zero_specialization");
}

CheckResult check_thm1_guard(const VerifyBounds& b) {
    Tally t;
    for_each_problem(b, [&](const SecantProblem& P) {
        if (P.base.rho() == 0) return;
        ++t.cases;
        if (thm1_empty(P).has_value()) t.fail(tuple_str(P));
    });
    return t.result("thm1_rho_zero_guard");
}

CheckResult check_canonical_consistency(const VerifyBounds& b, Tally* offset_tally) {
    Tally t;
    const Int g_top = std::min<Int>(12, b.g_max);
    for (Int g = 1; g <= g_top; ++g) {
        const SeriesParams canonical(g, g - 1, 2 * g - 2);
        for (Int d2 = 0; d2 <= 2 * g - 2; ++d2) {
            for (Int r2 = 0; r2 <= d2; ++r2) {
                if (rho_value(g, r2, d2) < 0) continue;
                if (g - d2 + r2 - 1 < 0) continue;
                ++t.cases;
                const DJPattern pattern({2 * g - 2 - d2, d2}, {0, r2}, {1, 1});
                const Int via_bound = dj_lower_bound(canonical, pattern);
                const Int via_formula = canonical_dj_dim(g, d2, r2);
                std::ostringstream os;
                os << "(g=" << g << ",d2=" << d2 << ",r2=" << r2 << ")";
                if (via_bound != via_formula) t.fail(os.str());
                if (offset_tally) {
                    ++offset_tally->cases;
                    if (canonical_dj_pair_count(g, d2, r2) - via_formula != r2) offset_tally->fail(os.str());
                }
            }
        }
    }
    return t.result("canonical_pattern_consistency");
}

CheckResult check_secant_pattern_specialization(const VerifyBounds& b) {
    Tally t;
    for_each_problem(b, [&](const SecantProblem& P) {
        if (P.r_prime() < 0) return;
        if (rho_value(P.base.g, P.r_prime(), P.d_prime()) < 0) return;
        ++t.cases;
        if (dj_ef_expected(P) != dj_lower_bound(P.base, secant_pattern(P))) t.fail(tuple_str(P));
    });
    return t.result("secant_pattern_specialization");
}

CheckResult check_cor5_thm4(const VerifyBounds& b) {
    Tally t;
    for_each_problem(b, [&](const SecantProblem& P) {
        if (!cor5_empty(P)) return;
        ++t.cases;
        const auto dim = thm4_dim(P);
        if (!dim || *dim >= 0) t.fail(tuple_str(P));
    });
    return t.result("cor5_implies_negative_thm4");
}

CheckResult check_thm1_bridge(const VerifyBounds& b) {
    Tally t;
    for_each_problem(b, [&](const SecantProblem& P) {
        if (P.base.rho() != 0) return;
        ++t.cases;
        if (thm1_empty(P).has_value() != cor5_empty(P)) t.fail(tuple_str(P));
    });
    return t.result("thm1_cor5_bridge");
}

CheckResult check_eq2_regression(const VerifyBounds& b, long long& tuples, std::size_t& keys) {
    Tally t;
    std::set<std::array<Int, 4>> key_set;
    for_each_problem(b, [&](const SecantProblem& P) {
        if (P.r_prime() < 0) return;
        ++t.cases;
        const Int gap = eq2_sides(P).gap();
        key_set.insert({P.e, P.f, P.base.r, P.base.speciality()});
        if (gap != P.f) t.fail(tuple_str(P) + " gap " + std::to_string(gap));
    });
    {
        const SecantProblem a1(SeriesParams(12, 5, 15), 4, 1);
        const SecantProblem a2(SeriesParams(7, 2, 7), 2, 1);
        t.cases += 2;
        if (eq2_sides(a1).gap() != 1) t.fail("anchor (12,5,15,4,1)");
        if (eq2_sides(a2).gap() != 1) t.fail("anchor (7,2,7,2,1)");
    }
    tuples = t.cases;
    keys = key_set.size();
    return t.result("eq2_gap_regression");
}

CheckResult check_refined_pair_identities(Tally& symmetry) {
    Tally t;
    for (Int g1 = 0; g1 <= 3; ++g1) {
        for (Int g2 = 0; g2 <= 3; ++g2) {
            for (Int r = 0; r <= 3; ++r) {
                for (Int d = r; d <= 8; ++d) {
                    const NodalSplit split(g1, g2, r, d);
                    const auto pairs = enumerate_refined_pairs(split);
                    for (const auto& [aY, aZ] : pairs) {
                        ++t.cases;
                        const auto alphaY = ramification_from_vanishing(aY);
                        const auto alphaZ = ramification_from_vanishing(aZ);
                        for (Int i = 0; i <= r; ++i) {
                            if (alphaY[static_cast<std::size_t>(i)] +
                                    alphaZ[static_cast<std::size_t>(r - i)] != d - r) {
                                t.fail("split (" + std::to_string(g1) + "," + std::to_string(g2) + "," +
                                       std::to_string(r) + "," + std::to_string(d) + ")");
                            }
                        }
                    }
                    // Swapping genera must swap the pair components.
                    ++symmetry.cases;
                    auto swapped = enumerate_refined_pairs(NodalSplit(g2, g1, r, d));
                    std::vector<std::pair<VanishingSequence, VanishingSequence>> mirrored;
                    mirrored.reserve(pairs.size());
                    for (const auto& [aY, aZ] : pairs) mirrored.emplace_back(aZ, aY);
                    std::sort(mirrored.begin(), mirrored.end());
                    std::sort(swapped.begin(), swapped.end());
                    if (mirrored != swapped) {
                        symmetry.fail("split (" + std::to_string(g1) + "," + std::to_string(g2) + "," +
                                      std::to_string(r) + "," + std::to_string(d) + ")");
                    }
                }
            }
        }
    }
    return t.result("refined_pairs_node_identity");
}

CheckResult check_pair_count_anchors() {
    Tally t;
    t.cases = 2;
    const auto one = enumerate_refined_pairs(NodalSplit(1, 1, 1, 2));
    if (one.size() != 1 || one[0].first.entries() != std::vector<Int>{0, 2} ||
        one[0].second.entries() != std::vector<Int>{0, 2}) {
        t.fail("(1,1,1,2)");
    }
    const auto two = enumerate_refined_pairs(NodalSplit(2, 2, 1, 3));
    if (two.size() != 2 || two[0].first.entries() != std::vector<Int>{0, 3} ||
        two[1].first.entries() != std::vector<Int>{1, 2}) {
        t.fail("(2,2,1,3)");
    }
    return t.result("refined_pairs_count_anchors");
}

CheckResult check_induction_datum(const VerifyBounds& b) {
    Tally t;
    for (Int r = 0; r <= b.r_max; ++r) {
        for (Int s = 2; s <= 5; ++s) {
            const Int g = s * (r + 1);
            const Int d = g + r - s;
            const SeriesParams p(g, r, d);
            ++t.cases;
            if (p.rho() != 0 || p.speciality() != s) { t.fail(series_str(p) + " setup"); continue; }
            const InductionDatum datum = induction_datum(p);
            const std::string where = series_str(p);
            if (datum.split.g1 + datum.split.g2 != g) { t.fail(where + " genus split"); continue; }
            if (datum.aspect1.speciality() != s - 1) { t.fail(where + " aspect1 speciality"); continue; }
            if (datum.aspect1.rho() != 0) { t.fail(where + " aspect1 rho"); continue; }
            if (datum.aspect2.speciality() != 1 || datum.aspect2.rho() != 0) {
                t.fail(where + " aspect2");
                continue;
            }
            if (datum.aspect2 != SeriesParams(r + 1, r, 2 * r)) { t.fail(where + " aspect2 type"); continue; }
            if (datum.twist1 != r || datum.twist2 != d - 2 * r) t.fail(where + " twists");
        }
    }
    return t.result("induction_datum_invariants");
}

struct OracleStats {
    long long applicable = 0;
    long long vacuously_true = 0;
    long long with_witnesses = 0;
    std::string first_witness;
};

CheckResult check_coefficient_identity(const VerifyBounds& b, OracleStats& stats) {
    Tally t;
    for_each_problem(b, [&](const SecantProblem& P) {
        if (!degeneration_applicable(P)) return;
        ++stats.applicable;
        const auto report = base_point_report(P);
        if (report.admissible_count == 0) {
            ++stats.vacuously_true;
        } else if (!report.holds_everywhere) {
            ++stats.with_witnesses;
            if (stats.first_witness.empty()) {
                const auto& w = report.witnesses.front();
                std::ostringstream os;
                os << tuple_str(P) << " d1=" << w.d1 << " d1p=" << w.d1p << " d2=" << w.d2
                   << " d2p=" << w.d2p << " (c1=" << w.c1 << ", c2=" << w.c2 << ")";
                stats.first_witness = os.str();
            }
        }
        for (const auto& dist : admissible_distributions(P)) {
            ++t.cases;
            if (dist.c1 + dist.c2 != P.base.r - P.e) t.fail(tuple_str(P));
        }
    });
    return t.result("node_coefficient_identity");
}

CheckResult check_both_nonpositive(const VerifyBounds& b) {
    Tally t;
    for_each_problem(b, [&](const SecantProblem& P) {
        if (!degeneration_applicable(P)) return;
        ++t.cases;
        if (both_nonpositive_possible(P) != (P.base.r <= P.e)) t.fail(tuple_str(P));
    });
    return t.result("both_nonpositive_regime");
}

CheckResult check_basepoint_margin(const VerifyBounds& b) {
    Tally t;
    for_each_problem(b, [&](const SecantProblem& P) {
        if (!degeneration_applicable(P)) return;
        const auto report = base_point_report(P);
        if (report.admissible_count == 0) return;
        ++t.cases;
        if (report.holds_everywhere && P.base.r - P.e < 2) t.fail(tuple_str(P));
    });
    return t.result("basepoint_margin");
}

CheckResult check_derived_offset(const VerifyBounds& b) {
    Tally t;
    for_each_problem(b, [&](const SecantProblem& P) {
        if (!degeneration_applicable(P)) return;
        ++t.cases;
        const auto bound = central_fiber_bound(P);
        if (bound.derived != bound.printed - 2) t.fail(tuple_str(P));
    });
    return t.result("central_fiber_derived_offset");
}

CheckResult check_closure_ranges(const VerifyBounds& b) {
    Tally t;
    for_each_problem(b, [&](const SecantProblem& P) {
        if (!degeneration_applicable(P)) return;
        if (P.e >= 2 * P.base.r) return;
        ++t.cases;
        const Int expdim = expected_secant_dim(P);
        const Int rp = P.r_prime();
        const auto bound = central_fiber_bound(P);
        const Int target = dj_ef_expected(P);
        if ((bound.derived <= target) != (expdim <= rp + 2)) { t.fail(tuple_str(P) + " derived"); return; }
        if ((bound.printed <= target) != (expdim <= rp)) { t.fail(tuple_str(P) + " printed"); return; }
        if (expdim <= rp + 2 && !thm4_via_degeneration(P)) t.fail(tuple_str(P) + " closure");
    });
    return t.result("degeneration_closure_ranges");
}

}  // namespace

std::vector<CheckResult> verify_all(const VerifyBounds& bounds) {
    if (bounds.g_max < 1 || bounds.r_max < 1 || bounds.e_max < 1) {
        throw std::invalid_argument("verify_all: bounds must be positive");
    }
    std::vector<CheckResult> results;

    results.push_back(check_residual_rho_symmetry(bounds));
    results.push_back(check_residual_involution(bounds));
    results.push_back(check_ramification_roundtrip());
    results.push_back(check_rho_degree_step(bounds));
    results.push_back(check_prop1_family());

    long long undetermined_nonneg = 0;
    results.push_back(check_sweep_conflicts(bounds, undetermined_nonneg));
    results.push_back(check_f_zero(bounds));
    results.push_back(check_thm1_guard(bounds));

    Tally offset_tally;
    results.push_back(check_canonical_consistency(bounds, &offset_tally));
    results.push_back(check_secant_pattern_specialization(bounds));
    results.push_back(check_cor5_thm4(bounds));
    results.push_back(check_thm1_bridge(bounds));

    long long gap_tuples = 0;
    std::size_t gap_keys = 0;
    results.push_back(check_eq2_regression(bounds, gap_tuples, gap_keys));

    Tally symmetry;
    results.push_back(check_refined_pair_identities(symmetry));
    results.push_back(symmetry.result("refined_pairs_symmetry"));
    results.push_back(check_pair_count_anchors());
    results.push_back(check_induction_datum(bounds));

    OracleStats stats;
    results.push_back(check_coefficient_identity(bounds, stats));
    results.push_back(check_both_nonpositive(bounds));
    results.push_back(check_basepoint_margin(bounds));
    results.push_back(check_derived_offset(bounds));
    results.push_back(check_closure_ranges(bounds));
    results.push_back(offset_tally.result("canonical_two_route_offset"));

    {
        std::ostringstream os;
        os << "lhs - rhs equals f at every one of " << gap_tuples << " tuples with r' >= 0 ("
           << gap_keys << " distinct (e,f,r,s) keys); the printed identity is off by exactly f";
        results.push_back(finding("eq2_gap_measurement", os.str()));
    }
    {
        std::ostringstream os;
        os << "strict node-coefficient positivity fails whenever the admissible set is nonempty: "
           << stats.with_witnesses << " of " << stats.applicable
           << " applicable tuples carry a zero-coefficient witness, " << stats.vacuously_true
           << " are vacuous (empty admissible set)";
        if (!stats.first_witness.empty()) os << "; first witness " << stats.first_witness;
        results.push_back(finding("base_point_claim", os.str()));
    }
    {
        std::ostringstream os;
        os << "the naive (class, moving part, residual part) count exceeds the canonical formula by "
              "exactly r2 at all " << offset_tally.cases << " checked patterns";
        results.push_back(finding("canonical_pair_count", os.str()));
    }
    {
        std::ostringstream os;
        os << undetermined_nonneg
           << " tuples with nonnegative expected dimension fall outside every criterion and stay "
              "Undetermined";
        results.push_back(finding("undetermined_population", os.str()));
    }

    return results;
}

bool all_sound(const std::vector<CheckResult>& results) noexcept {
    for (const CheckResult& r : results) {
        if (r.kind == CheckKind::Soundness && !r.passed) return false;
    }
    return true;
}

}  // namespace secantry
