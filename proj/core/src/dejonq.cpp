#include "secantry/dejonq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace secantry {

DJPattern::DJPattern(std::vector<Int> lambda, std::vector<Int> mu, std::vector<Int> nu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), nu_(std::move(nu)) {
    if (lambda_.empty() || lambda_.size() != mu_.size() || lambda_.size() != nu_.size()) {
        throw std::invalid_argument("DJPattern: lambda, mu, nu must be nonempty and of equal length");
    }
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        if (lambda_[i] < 0) throw std::invalid_argument("DJPattern: part degrees must be nonnegative");
        if (mu_[i] < 0) throw std::invalid_argument("DJPattern: part dimensions must be nonnegative");
        if (nu_[i] < 1) throw std::invalid_argument("DJPattern: multiplicities must be positive");
    }
}

Int DJPattern::weighted_degree() const noexcept {
    Int total = 0;
    for (std::size_t i = 0; i < lambda_.size(); ++i) total += nu_[i] * lambda_[i];
    return total;
}

Int DJPattern::length() const noexcept {
    return std::accumulate(lambda_.begin(), lambda_.end(), Int{0});
}

bool DJPattern::valid_for_genus(Int g) const noexcept {
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        if (rho_value(g, mu_[i], lambda_[i]) < 0) return false;
    }
    return true;
}

Int delta_dim(Int g, const DJPattern& pattern) {
    Int total = 0;
    for (std::size_t i = 0; i < pattern.parts(); ++i) {
        const Int part_rho = rho_value(g, pattern.mu()[i], pattern.lambda()[i]);
        if (part_rho < 0) {
            throw std::domain_error("delta_dim: part g^" + std::to_string(pattern.mu()[i]) + "_" +
                                    std::to_string(pattern.lambda()[i]) + " has rho = " +
                                    std::to_string(part_rho) + " < 0 at genus " + std::to_string(g));
        }
        total += part_rho + pattern.mu()[i];
    }
    return total;
}

Int dj_lower_bound(const SeriesParams& p, const DJPattern& pattern) {
    if (pattern.weighted_degree() != p.d) {
        throw std::domain_error("dj_lower_bound: pattern weighted degree " +
                                std::to_string(pattern.weighted_degree()) + " != series degree " +
                                std::to_string(p.d));
    }
    if (pattern.length() > p.d) {
        throw std::domain_error("dj_lower_bound: pattern length exceeds series degree");
    }
    for (Int mu_i : pattern.mu()) {
        if (mu_i > p.r) throw std::domain_error("dj_lower_bound: part dimension exceeds series dimension");
    }
    return delta_dim(p.g, pattern) - p.d + p.r;
}

DJPattern secant_pattern(const SecantProblem& P) {
    if (P.r_prime() < 0) throw std::domain_error("secant_pattern: requires r - e + f >= 0");
    return DJPattern({P.e, P.d_prime()}, {0, P.r_prime()}, {1, 1});
}

Int dj_ef_expected(const SecantProblem& P) {
    if (P.r_prime() < 0) throw std::domain_error("dj_ef_expected: requires r - e + f >= 0");
    return expected_secant_dim(P) - (P.base.speciality() - 1) * P.r_prime();
}

Int dj_ef_expected_ram(const SecantProblem& P, const RamificationSequence& alpha) {
    if (alpha.r() != P.r_prime()) {
        throw std::invalid_argument("dj_ef_expected_ram: alpha must have length r-e+f+1");
    }
    return dj_ef_expected(P) - alpha.sum();
}

namespace {

void check_canonical_args(Int g, Int d2, Int r2) {
    if (g < 1) throw std::domain_error("canonical_dj_dim: genus must be >= 1");
    if (d2 < 0 || r2 < 0) throw std::domain_error("canonical_dj_dim: d2, r2 must be nonnegative");
    if (rho_value(g, r2, d2) < 0) {
        throw std::domain_error("canonical_dj_dim: rho(g, r2, d2) = " +
                                std::to_string(rho_value(g, r2, d2)) + " < 0");
    }
    if (d2 > 2 * g - 2) throw std::domain_error("canonical_dj_dim: d2 must be <= 2g-2");
    if (g - d2 + r2 - 1 < 0) throw std::domain_error("canonical_dj_dim: residual part degree would be negative");
}

}  // namespace

Int canonical_dj_dim(Int g, Int d2, Int r2) {
    check_canonical_args(g, d2, r2);
    return rho_value(g, r2, d2) + g - d2 + r2 - 1;
}

Int canonical_dj_pair_count(Int g, Int d2, Int r2) {
    check_canonical_args(g, d2, r2);
    return rho_value(g, r2, d2) + r2 + (g - d2 + r2 - 1);
}

Int canonical_dj_dim_ram(Int g, Int d2, Int r2, const RamificationSequence& alpha) {
    if (alpha.r() != r2) {
        throw std::invalid_argument("canonical_dj_dim_ram: alpha must have length r2+1");
    }
    return canonical_dj_dim(g, d2, r2) - alpha.sum();
}

std::optional<Int> thm4_dim(const SecantProblem& P) {
    const Int rp = P.r_prime();
    if (P.base.rho() != 0 || rp < 0) return std::nullopt;
    if (P.e >= 2 * P.base.r) return std::nullopt;
    if (expected_secant_dim(P) > rp + 2) return std::nullopt;
    return dj_ef_expected(P);
}

bool cor5_empty(const SecantProblem& P) noexcept {
    const Int rp = P.r_prime();
    if (P.base.rho() != 0 || rp < 0 || P.f == 0) return false;
    if (P.e >= 2 * P.base.r) return false;
    const Int s = P.base.speciality();
    if (s < 2) return false;
    const Int expdim = expected_secant_dim(P);
    // Same sub-Coppens-Martens guard as thm1_empty.
    if (expdim >= rp) return false;
    return expdim <= rp + 2 && expdim < std::min((s - 1) * rp, rp + 2);
}

}  // namespace secantry
