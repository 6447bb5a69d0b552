#pragma once

#include <utility>
#include <vector>

#include "secantry/bn.hpp"

namespace secantry {

/// Two smooth components of genus g1 and g2 glued at a single node,
/// carrying aspects of a series of type g^r_d.
struct NodalSplit {
    Int g1 = 0;
    Int g2 = 0;
    Int r = 0;
    Int d = 0;

    NodalSplit(Int g1, Int g2, Int r, Int d);
    Int genus() const noexcept { return g1 + g2; }
};

/// Node compatibility of two aspects: a_i(Y) + a_{r-i}(Z) >= d for all i.
bool crude_compatible(const VanishingSequence& aY, const VanishingSequence& aZ);

/// Equality throughout: the refined case.
bool refined_compatible(const VanishingSequence& aY, const VanishingSequence& aZ);

/// Existence of an aspect with ramification at least alpha at the node on a
/// general pointed component: sum_j max(alpha_j + gi - d + r, 0) <= gi,
/// with gi the component's own genus.  An alternative reading fixes the
/// first component's genus in the summand for both components; it is kept
/// in eh_existence_fixed_summand for comparison and is off by default
/// everywhere.
bool eh_existence(Int component_genus, Int r, Int d, const RamificationSequence& alpha);
bool eh_existence_fixed_summand(Int summand_genus, Int component_genus, Int r, Int d,
                                const RamificationSequence& alpha);

/// All pairs of vanishing sequences (aspect on C1, aspect on C2) that are
/// refined-compatible and whose aspects exist on their components.  Pairs of
/// compatible ramification data, not series counted with multiplicity.
/// Ordered lexicographically by the first sequence.  Enumeration is capped
/// at r <= 10, d <= 30; larger requests are rejected.
std::vector<std::pair<VanishingSequence, VanishingSequence>>
enumerate_refined_pairs(const NodalSplit& split, bool fixed_summand_variant = false);

/// Degeneration datum for a rho = 0 series of speciality s >= 2:
/// g1 = (s-1)(r+1) carries (g1, r, d-r) twisted by r at the node,
/// g2 = r+1 carries its canonical series (g2, r, 2r) twisted by d-2r.
struct InductionDatum {
    NodalSplit split;
    SeriesParams aspect1;
    Int twist1 = 0;
    SeriesParams aspect2;
    Int twist2 = 0;
};

/// Requires rho(p) = 0 and s >= 2; throws std::domain_error otherwise.
InductionDatum induction_datum(const SeriesParams& p);

}  // namespace secantry
