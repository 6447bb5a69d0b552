#include "secantry/limit_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace secantry {

namespace {

constexpr Int kMaxEnumR = 10;
constexpr Int kMaxEnumD = 30;

void check_same_shape(const VanishingSequence& aY, const VanishingSequence& aZ) {
    if (aY.r() != aZ.r()) throw std::invalid_argument("vanishing sequences have different lengths");
    if (aY.degree() != aZ.degree()) throw std::invalid_argument("vanishing sequences have different degrees");
}

}  // namespace

NodalSplit::NodalSplit(Int g1_, Int g2_, Int r_, Int d_) : g1(g1_), g2(g2_), r(r_), d(d_) {
    if (g1 < 0 || g2 < 0) throw std::invalid_argument("NodalSplit: component genera must be nonnegative");
    if (r < 0 || r > d) throw std::invalid_argument("NodalSplit: need 0 <= r <= d");
}

bool crude_compatible(const VanishingSequence& aY, const VanishingSequence& aZ) {
    check_same_shape(aY, aZ);
    const auto r = static_cast<std::size_t>(aY.r());
    for (std::size_t i = 0; i <= r; ++i) {
        if (aY[i] + aZ[r - i] < aY.degree()) return false;
    }
    return true;
}

bool refined_compatible(const VanishingSequence& aY, const VanishingSequence& aZ) {
    check_same_shape(aY, aZ);
    const auto r = static_cast<std::size_t>(aY.r());
    for (std::size_t i = 0; i <= r; ++i) {
        if (aY[i] + aZ[r - i] != aY.degree()) return false;
    }
    return true;
}

bool eh_existence_fixed_summand(Int summand_genus, Int component_genus, Int r, Int d,
                                const RamificationSequence& alpha) {
    if (alpha.r() != r || alpha.degree() != d) {
        throw std::invalid_argument("eh_existence: alpha must be valid for (r, d)");
    }
    Int total = 0;
    for (Int a : alpha.entries()) {
        total += std::max<Int>(a + summand_genus - d + r, 0);
    }
    return total <= component_genus;
}

bool eh_existence(Int component_genus, Int r, Int d, const RamificationSequence& alpha) {
    return eh_existence_fixed_summand(component_genus, component_genus, r, d, alpha);
}

std::vector<std::pair<VanishingSequence, VanishingSequence>>
enumerate_refined_pairs(const NodalSplit& split, bool fixed_summand_variant) {
    if (split.r > kMaxEnumR || split.d > kMaxEnumD) {
        throw std::domain_error("enumerate_refined_pairs: capped at r <= " + std::to_string(kMaxEnumR) +
                                ", d <= " + std::to_string(kMaxEnumD));
    }
    const Int r = split.r;
    const Int d = split.d;
    std::vector<std::pair<VanishingSequence, VanishingSequence>> out;

    // Refined compatibility forces the second sequence: b_i = d - a_{r-i}.
    // Walk the first sequence lexicographically; the mirror is automatically
    // a valid vanishing sequence.
    std::vector<Int> a(static_cast<std::size_t>(r) + 1);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<Int>(i);

    const auto emit = [&]() {
        std::vector<Int> b(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) b[i] = d - a[a.size() - 1 - i];
        VanishingSequence first(a, d);
        VanishingSequence second(std::move(b), d);
        const auto alpha1 = ramification_from_vanishing(first);
        const auto alpha2 = ramification_from_vanishing(second);
        const Int summand1 = split.g1;
        const Int summand2 = fixed_summand_variant ? split.g1 : split.g2;
        if (eh_existence_fixed_summand(summand1, split.g1, r, d, alpha1) &&
            eh_existence_fixed_summand(summand2, split.g2, r, d, alpha2)) {
            out.emplace_back(std::move(first), std::move(second));
        }
    };

    // Odometer over strictly increasing tuples in [0, d].
    while (true) {
        emit();
        std::size_t i = a.size();
        while (i > 0) {
            --i;
            const Int limit = d - static_cast<Int>(a.size() - 1 - i);
            if (a[i] < limit) {
                ++a[i];
                for (std::size_t j = i + 1; j < a.size(); ++j) a[j] = a[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

InductionDatum induction_datum(const SeriesParams& p) {
    if (p.rho() != 0) {
        throw std::domain_error("induction_datum: requires rho = 0, got " + std::to_string(p.rho()));
    }
    const Int s = p.speciality();
    if (s < 2) {
        throw std::domain_error("induction_datum: requires speciality >= 2, got " + std::to_string(s));
    }
    const Int g1 = (s - 1) * (p.r + 1);
    const Int g2 = p.r + 1;
    InductionDatum datum{
        NodalSplit(g1, g2, p.r, p.d),
        SeriesParams(g1, p.r, p.d - p.r),
        p.r,
        SeriesParams(g2, p.r, 2 * p.r),
        p.d - 2 * p.r,
    };
    return datum;
}

}  // namespace secantry
