#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gring/division.hpp"
#include "gring/ring.hpp"

namespace gring {

/// Tri-state outcome of a bounded search.  `none_at_budget` means the
/// search space at this budget was exhausted (not a proof for unbounded
/// budgets); `budget_exceeded` means the enumeration cap was hit first.
enum class SearchStatus { found, none_at_budget, budget_exceeded };

struct ExactDivideResult {
    SearchStatus status{SearchStatus::none_at_budget};
    std::optional<RingElement> quotient;
};

/// The unique c with x = c*z, if one exists.  Works over fields directly
/// and over Z by solving in Q and checking integrality.  The search is
/// a boundary-peeling pass: every boundary point of the running element
/// pins its translate gamma*z geometrically, so at most
/// |candidate ball| subtractions decide divisibility.
ExactDivideResult exact_divide(const RingElement& x, const RingElement& z,
                               std::size_t budget = kDefaultBallBudget);

struct RelationSearchResult {
    SearchStatus status{SearchStatus::none_at_budget};
    std::optional<Relation> relation;
};

/// Bounded search for (a, b) != (0, 0) with a*x + b*y = 0.  Unknown
/// supports live on balls of doubled radius `radius2_budget` around the
/// identity after translating x and y so their barycenters sit near the
/// origin.  A found relation is verified exactly and has both a != 0 and
/// b != 0.
RelationSearchResult relation_search(const RingElement& x, const RingElement& y,
                                     Dist2 radius2_budget,
                                     std::size_t budget = kDefaultBallBudget);

/// Left-multiplies by the inverse of the unit lambda*gamma formed from
/// the shortlex-smallest support word and its coefficient, so the result
/// has identity in its support with coefficient 1.  GCDs are only
/// well-defined up to units of kF_n, which are exactly the monomials.
RingElement unit_normalize(const RingElement& x);

struct ChainEntry {
    RingElement dividend, divisor, quotient, remainder;
    Relation carried;
};

struct EuclidResult {
    RingElement gcd;                     // unit-normalized
    RingElement bezout_x, bezout_y;      // gcd = bezout_x*x + bezout_y*y
    RingElement cofactor_x, cofactor_y;  // x = cofactor_x*gcd, y = cofactor_y*gcd
    std::vector<ChainEntry> chain;
};

/// Euclid's algorithm with relation propagation; Bezout data assembled by
/// back-substitution and every identity re-verified exactly.
EuclidResult euclid(const RingElement& x, const RingElement& y, const Relation& rel,
                    std::size_t budget = kDefaultBallBudget);

struct GenBounds {
    int max_seed_terms{3};
    int max_seed_len{2};
    int max_factor_terms{2};
    int max_factor_len{2};
    int max_support{12};
    Dist2 max_diameter2{24};
};

/// A generated pair with its certified relation and the planted seed.
struct PairSpec {
    RingElement x, y;
    Relation rel;
    RingElement seed_element; // z0 divides both x and y exactly
    std::vector<std::string> script;
};

/// Backward pair generator: starts from (z0, a*z0) and alternately mixes
/// one generator into the other, tracking the relation symbolically.
/// Deterministic in (seed, depth, bounds); the relation is re-verified.
PairSpec generate_pair(std::uint64_t seed, int depth, const CoeffDomain& domain,
                       const Alphabet& alphabet, const GenBounds& bounds = {});

} // namespace gring
