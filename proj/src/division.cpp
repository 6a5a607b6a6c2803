#include "gring/division.hpp"

#include <cassert>

namespace gring {

bool verify_relation(const RingElement& x, const RingElement& y, const Relation& rel) {
    if (rel.a.is_zero() && rel.b.is_zero()) return false;
    return (rel.a * x + rel.b * y).is_zero();
}

DivisionStep division_step(const RingElement& x, const RingElement& y, const Relation& rel) {
    if (!x.domain().is_field()) throw std::invalid_argument("division requires a field domain");
    if (x.is_zero() || y.is_zero()) throw std::invalid_argument("division step needs x, y != 0");
    if (!verify_relation(x, y, rel)) throw std::invalid_argument("relation does not annihilate (x, y)");
    if (rel.a.is_zero() || rel.b.is_zero())
        throw std::invalid_argument("relation with a zero component certifies a zero divisor");
    if (diameter2(x) < diameter2(y)) throw std::invalid_argument("division step needs |x| >= |y|");

    const CoeffDomain& dom = x.domain();

    // Ball of the product ax; its boundary points steer the step.
    RingElement ax = rel.a * x;
    if (ax.is_zero()) throw ClaimViolation(1, "a*x vanished for nonzero a, x");
    SupportGeometry axg = geometry(ax);

    // The x-translate meeting the boundary picks the normalizer; ties go
    // to the shortlex-smallest gamma so traces are deterministic.
    const Word* gamma = nullptr;
    for (const auto& [g, cg] : rel.a.terms()) {
        for (const auto& [s, cs] : x.terms()) {
            if (dist2(TreePoint::vertex(g * s), axg.ball.center) == axg.ball.radius2) {
                gamma = &g;
                break;
            }
        }
        if (gamma) break;
    }
    if (!gamma) throw ClaimViolation(1, "no x-translate meets the boundary sphere");

    // Left-multiply the relation by (a_gamma gamma)^-1; x and y stay in
    // the original frame.
    Rat a_gamma = rel.a.coeff(*gamma);
    RingElement normalizer =
        RingElement::monomial(dom, x.alphabet(), dom.inv(a_gamma), gamma->inverse());
    RingElement a1 = normalizer * rel.a;
    RingElement b1 = normalizer * rel.b;
    assert(a1.coeff(Word{}) == dom.one());

    RingElement a1x = a1 * x;
    SupportGeometry pg = geometry(a1x);
    std::vector<Word> extremal = extremal_points(x, pg.ball);
    if (extremal.empty()) throw ClaimViolation(1, "normalized x misses the boundary sphere");

    // Claim 1 and the cancellation coefficients: each extremal point of x
    // lies in exactly one x-translate (the identity one) and exactly one
    // y-translate, whose coefficient it inherits.
    RingElement c(dom, x.alphabet());
    for (const Word& e : extremal) {
        for (const auto& [g, cg] : a1.terms()) {
            if (g.is_identity()) continue;
            if (!x.coeff(g.inverse() * e).is_zero())
                throw ClaimViolation(1, "boundary point lies in two x-translates");
        }
        const Word* rho = nullptr;
        for (const auto& [g, cg] : b1.terms()) {
            if (!y.coeff(g.inverse() * e).is_zero()) {
                if (rho) throw ClaimViolation(1, "boundary point lies in two y-translates");
                rho = &g;
            }
        }
        if (!rho) throw ClaimViolation(1, "extremal point not covered by any y-translate");
        if (c.coeff(*rho).is_zero()) c.accumulate(*rho, dom.neg(b1.coeff(*rho)));
    }

    DivisionStep step{c, x - c * y, Relation{a1, b1 + a1 * c}, {}};

    for (const Word& e : extremal)
        if (!step.x1.coeff(e).is_zero())
            throw ClaimViolation(1, "extremal point survived the cancellation");
    Dist2 before = diameter2(x);
    std::optional<Dist2> after;
    if (!step.x1.is_zero()) {
        after = diameter2(step.x1);
        if (*after >= before) throw ClaimViolation(2, "diameter did not strictly decrease");
    }
    assert(verify_relation(step.x1, y, step.rel1) || step.x1.is_zero());

    step.record.normalizer_coeff = a_gamma;
    step.record.normalizer_word = *gamma;
    step.record.extremal = std::move(extremal);
    step.record.cancellation = step.cancellation;
    step.record.diameter2_before = before;
    step.record.diameter2_after = after;
    return step;
}

DivisionResult divide(const RingElement& x, const RingElement& y, const Relation& rel) {
    if (y.is_zero()) throw std::invalid_argument("division by zero element");
    if (!verify_relation(x, y, rel)) throw std::invalid_argument("relation does not annihilate (x, y)");
    if (!x.domain().is_field()) throw std::invalid_argument("division requires a field domain");

    const CoeffDomain& dom = x.domain();
    DivisionResult out{RingElement::zero(dom, x.alphabet()), x, {}};
    if (x.is_zero()) {
        out.remainder = x;
        return out;
    }
    if (rel.a.is_zero() || rel.b.is_zero())
        throw std::invalid_argument("relation with a zero component certifies a zero divisor");

    Dist2 dy = diameter2(y);
    RingElement current = x;
    Relation carried = rel;
    while (!current.is_zero() && diameter2(current) >= dy) {
        DivisionStep step = division_step(current, y, carried);
        out.quotient = out.quotient + step.cancellation;
        current = step.x1;
        carried = step.rel1;
        out.trace.push_back(step.record);
        // Accumulation invariant: x = q*y + current at every stage.
        assert((out.quotient * y + current) == x);
    }
    out.remainder = current;

    if (!(out.quotient * y + out.remainder == x))
        throw std::logic_error("division postcondition x = q*y + r failed");
    if (!out.remainder.is_zero() && diameter2(out.remainder) >= dy)
        throw std::logic_error("division postcondition |r| < |y| failed");
    return out;
}

} // namespace gring
