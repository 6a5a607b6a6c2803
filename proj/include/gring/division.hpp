#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gring/ring.hpp"

namespace gring {

/// A certified pair (a, b) with a*x + b*y = 0 driving division.
struct Relation {
    RingElement a, b;
};

/// True iff a*x + b*y == 0 exactly and (a, b) != (0, 0).
bool verify_relation(const RingElement& x, const RingElement& y, const Relation& rel);

/// Raised when one of the structural claims of the algorithm fails: a
/// boundary point in two translates (claim 1) or a non-decreasing
/// diameter (claim 2).  Impossible in a tree; signals an implementation
/// bug, never user error.
class ClaimViolation : public std::logic_error {
public:
    ClaimViolation(int claim, const std::string& what)
        : std::logic_error("claim " + std::to_string(claim) + " violated: " + what),
          claim_(claim) {}
    int claim() const noexcept { return claim_; }

private:
    int claim_;
};

struct StepRecord {
    Rat normalizer_coeff;             // a_gamma inverted to normalize the relation
    Word normalizer_word;             // gamma
    std::vector<Word> extremal;       // cancelled extremal points of x
    RingElement cancellation;         // c with x1 = x - c*y
    Dist2 diameter2_before{0};
    std::optional<Dist2> diameter2_after; // empty when x1 = 0
};

struct DivisionStep {
    RingElement cancellation;
    RingElement x1;
    Relation rel1;
    StepRecord record;
};

/// One diameter-reducing step: normalize the relation so x meets the
/// boundary of a*x, cancel the extremal points of x with y-translates,
/// and propagate the relation to (x1, y).  Requires |x| >= |y| (doubled
/// diameters) and a valid relation over a field.
DivisionStep division_step(const RingElement& x, const RingElement& y, const Relation& rel);

struct DivisionResult {
    RingElement quotient, remainder;
    std::vector<StepRecord> trace;
};

/// x = q*y + r with r = 0 or |r| < |y|.  The identity is re-verified
/// exactly before returning.
DivisionResult divide(const RingElement& x, const RingElement& y, const Relation& rel);

} // namespace gring
