#pragma once

#include <optional>
#include <vector>

#include "secantry/bn.hpp"
#include "secantry/secant.hpp"

namespace secantry {

/// A refined decomposition shape: part degrees (lambda), minimum series
/// dimension each part moves in (mu), and part multiplicities (nu), all of
/// the same length k.  A divisor of this shape is sum nu_i * D_i with
/// deg D_i = lambda_i and D_i moving in a series of dimension >= mu_i.
class DJPattern {
public:
    DJPattern(std::vector<Int> lambda, std::vector<Int> mu, std::vector<Int> nu);

    std::size_t parts() const noexcept { return lambda_.size(); }
    const std::vector<Int>& lambda() const noexcept { return lambda_; }
    const std::vector<Int>& mu() const noexcept { return mu_; }
    const std::vector<Int>& nu() const noexcept { return nu_; }

    Int weighted_degree() const noexcept;  // sum nu_i * lambda_i; the ambient degree
    Int length() const noexcept;           // N = sum lambda_i

    /// Every part must be Brill-Noether feasible: rho(g, mu_i, lambda_i) >= 0.
    bool valid_for_genus(Int g) const noexcept;

private:
    std::vector<Int> lambda_, mu_, nu_;
};

/// Dimension of the decomposition locus inside C_d:
/// sum_i (rho(g, mu_i, lambda_i) + mu_i).  Rejects infeasible patterns.
Int delta_dim(Int g, const DJPattern& pattern);

/// Degeneracy-locus lower bound for the refined space of p at the pattern:
/// delta_dim - d + r.  The pattern must match p (weighted degree d, length
/// <= d, mu_i <= r).
Int dj_lower_bound(const SeriesParams& p, const DJPattern& pattern);

/// The secant pattern lambda = (e, d-e), mu = (0, r'), nu = (1, 1).
/// Requires r' >= 0.
DJPattern secant_pattern(const SecantProblem& P);

/// Expected dimension at the secant pattern:
/// expected_secant_dim - (s-1)(r-e+f).  Requires r' >= 0.
Int dj_ef_expected(const SecantProblem& P);

/// Same, with ramification at least alpha imposed on the residual series at
/// a general point: subtract sum alpha_i.  alpha must have length r'+1.
Int dj_ef_expected_ram(const SecantProblem& P, const RamificationSequence& alpha);

/// Dimension of the refined space of the canonical series at the pattern
/// (2g-2-d2, d2), (0, r2), (1, 1): rho(g, r2, d2) + g - d2 + r2 - 1.
/// Requires rho(g, r2, d2) >= 0, d2 <= 2g-2, g - d2 + r2 - 1 >= 0.
Int canonical_dj_dim(Int g, Int d2, Int r2);

/// Naive count over (class, moving part, residual part) triples; exceeds
/// canonical_dj_dim by exactly r2.  Exposed as the second route so the
/// discrepancy stays visible.
Int canonical_dj_pair_count(Int g, Int d2, Int r2);

/// canonical_dj_dim minus imposed ramification; alpha must have length r2+1.
Int canonical_dj_dim_ram(Int g, Int d2, Int r2, const RamificationSequence& alpha);

/// When the dimension theorem applies (rho = 0, expected secant dimension
/// <= r'+2, e < 2r), the dimension it asserts for the refined secant-pattern
/// space, i.e. dj_ef_expected; absent otherwise.
std::optional<Int> thm4_dim(const SecantProblem& P);

/// Emptiness of the refined secant-pattern space (hence of the secant
/// variety) for rho = 0: the dimension-theorem conditions with
/// expected dimension < min((s-1)(r-e+f), r-e+f+2).  Gated exactly like
/// thm1_empty (f >= 1, s >= 2, below the Coppens-Martens threshold), so the
/// two fire on precisely the same tuples.
bool cor5_empty(const SecantProblem& P) noexcept;

}  // namespace secantry
