#include "gring/ring.hpp"

#include <stdexcept>

namespace gring {

namespace {

void require_compatible(const RingElement& x, const RingElement& y) {
    if (!(x.domain() == y.domain()))
        throw std::invalid_argument("coefficient domain mismatch");
    if (!(x.alphabet() == y.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
}

} // namespace

RingElement RingElement::monomial(const CoeffDomain& d, const Alphabet& a, const Rat& coeff,
                                  const Word& w) {
    RingElement x(d, a);
    x.accumulate(w, d.canon(coeff));
    return x;
}

RingElement RingElement::one(const CoeffDomain& d, const Alphabet& a) {
    return monomial(d, a, Rat(1), Word{});
}

Coeff RingElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
}

std::vector<Word> RingElement::support() const {
    std::vector<Word> out;
    out.reserve(terms_.size());
    for (const auto& [w, c] : terms_) out.push_back(w);
    return out;
}

void RingElement::accumulate(const Word& w, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second = domain_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

RingElement RingElement::scaled(const Rat& c) const {
    RingElement out(domain_, alphabet_);
    Coeff cc = domain_.canon(c);
    if (cc == 0) return out;
    for (const auto& [w, v] : terms_) out.accumulate(w, domain_.mul(v, cc));
    return out;
}

RingElement operator+(const RingElement& x, const RingElement& y) {
    require_compatible(x, y);
    RingElement out = x;
    for (const auto& [w, c] : y.terms_) out.accumulate(w, c);
    return out;
}

RingElement operator-(const RingElement& x, const RingElement& y) {
    require_compatible(x, y);
    RingElement out = x;
    for (const auto& [w, c] : y.terms_) out.accumulate(w, y.domain_.neg(c));
    return out;
}

RingElement operator-(const RingElement& x) { return x.scaled(Rat(-1)); }

RingElement operator*(const RingElement& x, const RingElement& y) {
    require_compatible(x, y);
    RingElement out(x.domain_, x.alphabet_);
    for (const auto& [u, cu] : x.terms_)
        for (const auto& [v, cv] : y.terms_)
            out.accumulate(u * v, x.domain_.mul(cu, cv));
    return out;
}

RingElement translate(const Word& gamma, const RingElement& x) {
    RingElement out(x.domain(), x.alphabet());
    for (const auto& [w, c] : x.terms()) out.accumulate(gamma * w, c);
    return out;
}

SupportGeometry geometry(const RingElement& x) {
    if (x.is_zero()) throw std::invalid_argument("geometry of the zero element");
    SupportGeometry g;
    g.support = x.support();
    DiameterInfo d = diameter2_of(g.support);
    g.diameter2 = d.diameter2;
    g.ball = smallest_ball(g.support);
    for (const Word& w : g.support)
        if (dist2(TreePoint::vertex(w), g.ball.center) == g.ball.radius2) g.boundary.push_back(w);
    return g;
}

Dist2 diameter2(const RingElement& x) {
    if (x.is_zero()) throw std::invalid_argument("diameter of the zero element");
    return diameter2_of(x.support()).diameter2;
}

std::vector<Word> extremal_points(const RingElement& x, const Ball& b) {
    std::vector<Word> out;
    for (const auto& [w, c] : x.terms()) {
        Dist2 d = dist2(TreePoint::vertex(w), b.center);
        if (d > b.radius2)
            throw std::invalid_argument("support escapes the ball");
        if (d == b.radius2) out.push_back(w);
    }
    return out;
}

RingElement reduce_mod_p(const RingElement& x, std::uint64_t p) {
    if (x.domain().kind() == CoeffDomain::Kind::prime_field)
        throw std::invalid_argument("element is already over a prime field");
    CoeffDomain fp = CoeffDomain::prime_field(p);
    RingElement out(fp, x.alphabet());
    for (const auto& [w, c] : x.terms()) {
        if (denominator(c) != 1)
            throw std::domain_error("non-integral coefficient under mod-p reduction");
        out.accumulate(w, fp.canon(c));
    }
    return out;
}

RingElement to_rationals(const RingElement& x) {
    RingElement out(CoeffDomain::rationals(), x.alphabet());
    for (const auto& [w, c] : x.terms()) out.accumulate(w, c);
    return out;
}

RingElement to_integers(const RingElement& x) {
    CoeffDomain z = CoeffDomain::integers();
    RingElement out(z, x.alphabet());
    for (const auto& [w, c] : x.terms()) out.accumulate(w, z.canon(c));
    return out;
}

} // namespace gring
