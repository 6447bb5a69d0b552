#include "secantry/bn.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace secantry {

namespace {

std::string triple(Int g, Int r, Int d) {
    return "(" + std::to_string(g) + "," + std::to_string(r) + "," + std::to_string(d) + ")";
}

}  // namespace

SeriesParams::SeriesParams(Int g_, Int r_, Int d_) : g(g_), r(r_), d(d_) {
    if (g < 0) throw std::invalid_argument("SeriesParams " + triple(g, r, d) + ": genus must be nonnegative");
    if (r < 0 || r > d) throw std::invalid_argument("SeriesParams " + triple(g, r, d) + ": need 0 <= r <= d");
}

Int rho(const SeriesParams& p) noexcept { return p.rho(); }

Int speciality(const SeriesParams& p) noexcept { return p.speciality(); }

SeriesParams residual(const SeriesParams& p) {
    const Int s = p.speciality();
    if (s < 1) {
        throw std::domain_error("residual: series " + triple(p.g, p.r, p.d) +
                                " is non-special (s = " + std::to_string(s) + ")");
    }
    return SeriesParams(p.g, s - 1, 2 * p.g - 2 - p.d);
}

VanishingSequence::VanishingSequence(std::vector<Int> entries, Int degree)
    : entries_(std::move(entries)), degree_(degree) {
    if (entries_.empty()) throw std::invalid_argument("VanishingSequence: empty");
    if (entries_.front() < 0) throw std::invalid_argument("VanishingSequence: a_0 must be >= 0");
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] <= entries_[i - 1]) {
            throw std::invalid_argument("VanishingSequence: entries must be strictly increasing");
        }
    }
    if (entries_.back() > degree_) {
        throw std::invalid_argument("VanishingSequence: a_r must be <= d");
    }
}

RamificationSequence::RamificationSequence(std::vector<Int> entries, Int degree)
    : entries_(std::move(entries)), degree_(degree) {
    if (entries_.empty()) throw std::invalid_argument("RamificationSequence: empty");
    if (entries_.front() < 0) throw std::invalid_argument("RamificationSequence: alpha_0 must be >= 0");
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] < entries_[i - 1]) {
            throw std::invalid_argument("RamificationSequence: entries must be nondecreasing");
        }
    }
    if (entries_.back() > degree_ - r()) {
        throw std::invalid_argument("RamificationSequence: alpha_r must be <= d - r");
    }
}

Int RamificationSequence::sum() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), Int{0});
}

RamificationSequence ramification_from_vanishing(const VanishingSequence& a) {
    std::vector<Int> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - static_cast<Int>(i);
    return RamificationSequence(std::move(out), a.degree());
}

VanishingSequence vanishing_from_ramification(const RamificationSequence& alpha) {
    std::vector<Int> out(alpha.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha[i] + static_cast<Int>(i);
    return VanishingSequence(std::move(out), alpha.degree());
}

Int adjusted_rho(const SeriesParams& p, const RamificationSequence& alpha) {
    if (alpha.r() != p.r || alpha.degree() != p.d) {
        throw std::invalid_argument("adjusted_rho: ramification sequence does not match (r, d) = (" +
                                    std::to_string(p.r) + "," + std::to_string(p.d) + ")");
    }
    return p.rho() - alpha.sum();
}

}  // namespace secantry
