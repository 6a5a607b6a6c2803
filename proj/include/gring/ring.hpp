#pragma once

#include <map>
#include <span>
#include <vector>

#include "gring/coeff.hpp"
#include "gring/tree.hpp"
#include "gring/words.hpp"

namespace gring {

/// An element of the group ring kF_n: a finite zero-free map from reduced
/// words to coefficients.  Canonical form (no stored zeros, terms in
/// shortlex order) makes equality and zero tests structural.
class RingElement {
public:
    using TermMap = std::map<Word, Coeff, ShortlexLess>;

    RingElement(CoeffDomain domain, Alphabet alphabet)
        : domain_(std::move(domain)), alphabet_(std::move(alphabet)) {}

    static RingElement zero(const CoeffDomain& d, const Alphabet& a) { return RingElement(d, a); }
    static RingElement monomial(const CoeffDomain& d, const Alphabet& a, const Rat& coeff,
                                const Word& w);
    static RingElement one(const CoeffDomain& d, const Alphabet& a);

    const CoeffDomain& domain() const noexcept { return domain_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Coeff coeff(const Word& w) const;
    std::vector<Word> support() const;

    /// Adds c*w in place, keeping canonical form.
    void accumulate(const Word& w, const Coeff& c);

    RingElement scaled(const Rat& c) const;

    friend RingElement operator+(const RingElement& x, const RingElement& y);
    friend RingElement operator-(const RingElement& x, const RingElement& y);
    friend RingElement operator-(const RingElement& x);
    /// Convolution product sum x_u y_v (uv).
    friend RingElement operator*(const RingElement& x, const RingElement& y);

    bool operator==(const RingElement& other) const {
        return domain_ == other.domain_ && alphabet_ == other.alphabet_ && terms_ == other.terms_;
    }

private:
    CoeffDomain domain_;
    Alphabet alphabet_;
    TermMap terms_;
};

/// Left translation gamma * x.
RingElement translate(const Word& gamma, const RingElement& x);

/// Support geometry of a nonzero element: support, doubled diameter,
/// smallest enclosing ball, and the boundary points (support points at
/// exactly radius2 from the center).
struct SupportGeometry {
    std::vector<Word> support;
    Dist2 diameter2{0};
    Ball ball;
    std::vector<Word> boundary;
};

SupportGeometry geometry(const RingElement& x);

/// Doubled support diameter without the full ball computation.
Dist2 diameter2(const RingElement& x);

/// Support points of x lying exactly on the boundary sphere of b.
/// Throws if the support escapes the ball.
std::vector<Word> extremal_points(const RingElement& x, const Ball& b);

/// Termwise mod-p reduction of an integral element over Q.
RingElement reduce_mod_p(const RingElement& x, std::uint64_t p);

/// Same terms reinterpreted over Q; requires integral coefficients when
/// coming from Z (always true by the Z-domain invariant).
RingElement to_rationals(const RingElement& x);

/// Same terms reinterpreted over Z; throws on non-integral coefficients.
RingElement to_integers(const RingElement& x);

} // namespace gring
