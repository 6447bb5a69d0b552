#pragma once

#include <cstdint>
#include <vector>

namespace secantry {

using Int = std::int64_t;

/// Brill-Noether number g - (r+1)(g-d+r) on raw integers.  No range checks,
/// so derived parameter tuples that fall outside the SeriesParams range
/// (e.g. residual secant data with r' > d') can still be probed.
constexpr Int rho_value(Int g, Int r, Int d) noexcept {
    return g - (r + 1) * (g - d + r);
}

/// Index of speciality g - d + r.
constexpr Int speciality_value(Int g, Int r, Int d) noexcept {
    return g - d + r;
}

/// A linear series type g^r_d on a curve of genus g.  rho and the index of
/// speciality are always recomputed from the fields, never stored.
struct SeriesParams {
    Int g = 0;
    Int r = 0;
    Int d = 0;

    SeriesParams() = default;
    SeriesParams(Int g, Int r, Int d);  // requires g >= 0 and 0 <= r <= d

    Int rho() const noexcept { return rho_value(g, r, d); }
    Int speciality() const noexcept { return speciality_value(g, r, d); }

    friend bool operator==(const SeriesParams&, const SeriesParams&) = default;
};

Int rho(const SeriesParams& p) noexcept;
Int speciality(const SeriesParams& p) noexcept;

/// The residual series |K - D| of a complete special series:
/// (g, s-1, 2g-2-d).  Requires s >= 1; throws std::domain_error otherwise.
/// rho is preserved under residuation and the map is an involution.
SeriesParams residual(const SeriesParams& p);

/// Orders of vanishing 0 <= a_0 < a_1 < ... < a_r <= d of the sections of a
/// series at a point.  Validated at construction.
class VanishingSequence {
public:
    VanishingSequence(std::vector<Int> entries, Int degree);

    const std::vector<Int>& entries() const noexcept { return entries_; }
    Int degree() const noexcept { return degree_; }
    Int r() const noexcept { return static_cast<Int>(entries_.size()) - 1; }
    Int operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;
    friend auto operator<=>(const VanishingSequence&, const VanishingSequence&) = default;

private:
    std::vector<Int> entries_;
    Int degree_;
};

/// Ramification orders 0 <= alpha_0 <= ... <= alpha_r <= d - r at a point,
/// where alpha_i = a_i - i.  Validated at construction.
class RamificationSequence {
public:
    RamificationSequence(std::vector<Int> entries, Int degree);

    const std::vector<Int>& entries() const noexcept { return entries_; }
    Int degree() const noexcept { return degree_; }
    Int r() const noexcept { return static_cast<Int>(entries_.size()) - 1; }
    Int operator[](std::size_t i) const { return entries_[i]; }
    Int sum() const noexcept;

    friend bool operator==(const RamificationSequence&, const RamificationSequence&) = default;
    friend auto operator<=>(const RamificationSequence&, const RamificationSequence&) = default;

private:
    std::vector<Int> entries_;
    Int degree_;
};

/// alpha_i = a_i - i; inverse of vanishing_from_ramification.
RamificationSequence ramification_from_vanishing(const VanishingSequence& a);
VanishingSequence vanishing_from_ramification(const RamificationSequence& alpha);

/// rho(p) minus the total ramification imposed at one point.  alpha must
/// match p's (r, d).
Int adjusted_rho(const SeriesParams& p, const RamificationSequence& alpha);

}  // namespace secantry
