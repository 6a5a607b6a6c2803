#include "gring/euclid.hpp"

#include <cassert>
#include <random>

#include "gring/linalg.hpp"
#include "gring/parse.hpp"

namespace gring {

namespace {

ExactDivideResult exact_divide_field(const RingElement& x, const RingElement& z,
                                     std::size_t budget) {
    const CoeffDomain& dom = x.domain();
    ExactDivideResult out;
    if (x.is_zero()) {
        out.status = SearchStatus::found;
        out.quotient = RingElement::zero(dom, x.alphabet());
        return out;
    }

    SupportGeometry zg = geometry(z);
    SupportGeometry xg = geometry(x);
    Dist2 q0 = xg.ball.radius2 - zg.ball.radius2;
    if (q0 < 0) return out; // none: the z-ball cannot fit inside the x-ball

    // The support of any quotient c lies among the gammas moving the
    // z-center into the x-ball shrunk by the z-radius, so the peeling
    // loop below needs at most that many subtractions when x = c*z.
    std::size_t rigorous_cap = ball_vertex_count_bound(
        xg.ball.center.is_vertex(), q0 + (zg.ball.center.is_vertex() ? 0 : 1),
        x.alphabet().rank());
    std::size_t limit = std::min(rigorous_cap, budget);

    RingElement current = x;
    RingElement c(dom, x.alphabet());
    std::size_t steps = 0;
    while (!current.is_zero()) {
        if (steps++ >= limit) {
            out.status = (limit == rigorous_cap) ? SearchStatus::none_at_budget
                                                 : SearchStatus::budget_exceeded;
            return out;
        }
        SupportGeometry g = geometry(current);
        if (g.ball.radius2 < zg.ball.radius2) return out;

        // A boundary point of current = c_rem*z sits in a unique z-translate
        // whose center lies exactly radius(z) along the geodesic toward the
        // ball center; that pins gamma and its coefficient.
        const Word& e = g.boundary.front();
        TreePoint spot = geodesic_tree_point(TreePoint::vertex(e), g.ball.center, zg.ball.radius2);
        Word gamma;
        if (zg.ball.center.is_vertex()) {
            assert(spot.is_vertex());
            gamma = spot.base() * zg.ball.center.base().inverse();
        } else {
            assert(!spot.is_vertex());
            Word cand1 = spot.base() * zg.ball.center.base().inverse();
            Word cand2 = spot.far_endpoint() * zg.ball.center.base().inverse();
            if (translate(cand1, zg.ball.center) == spot)
                gamma = cand1;
            else if (translate(cand2, zg.ball.center) == spot)
                gamma = cand2;
            else
                return out;
        }
        Coeff zc = z.coeff(gamma.inverse() * e);
        if (zc == 0) return out;
        Coeff kappa = dom.mul(current.coeff(e), dom.inv(zc));
        c.accumulate(gamma, kappa);
        current = current - translate(gamma, z).scaled(kappa);
    }
    assert(c * z == x);
    out.status = SearchStatus::found;
    out.quotient = std::move(c);
    return out;
}

} // namespace

ExactDivideResult exact_divide(const RingElement& x, const RingElement& z, std::size_t budget) {
    if (z.is_zero()) throw std::invalid_argument("exact division by zero");
    if (x.domain().kind() == CoeffDomain::Kind::integers) {
        ExactDivideResult rat = exact_divide_field(to_rationals(x), to_rationals(z), budget);
        if (rat.status != SearchStatus::found) return rat;
        for (const auto& [w, c] : rat.quotient->terms())
            if (denominator(c) != 1) return {SearchStatus::none_at_budget, std::nullopt};
        return {SearchStatus::found, to_integers(*rat.quotient)};
    }
    if (!x.domain().is_field())
        throw std::invalid_argument("exact_divide requires a field or Z domain");
    return exact_divide_field(x, z, budget);
}

namespace {

Word anchor_vertex(const TreePoint& p) { return p.base(); }

} // namespace

RelationSearchResult relation_search(const RingElement& x, const RingElement& y,
                                     Dist2 radius2_budget, std::size_t budget) {
    if (x.is_zero() || y.is_zero())
        throw std::invalid_argument("relation search needs nonzero elements");
    if (!x.domain().is_field())
        throw std::invalid_argument("relation search requires a field domain");
    const CoeffDomain& dom = x.domain();
    const Alphabet& alpha = x.alphabet();

    Word gx = anchor_vertex(geometry(x).ball.center);
    Word gy = anchor_vertex(geometry(y).ball.center);
    RingElement xs = translate(gx.inverse(), x);
    RingElement ys = translate(gy.inverse(), y);

    std::vector<Word> box;
    try {
        box = ball_vertices(Ball{TreePoint::vertex(Word{}), radius2_budget}, alpha.rank(), budget);
    } catch (const BudgetExceeded&) {
        return {SearchStatus::budget_exceeded, std::nullopt};
    }

    std::map<Word, std::size_t, ShortlexLess> row_of;
    auto row_index = [&](const Word& w) {
        auto [it, inserted] = row_of.try_emplace(w, row_of.size());
        return it->second;
    };
    struct Entry {
        std::size_t row, col;
        Coeff value;
    };
    std::vector<Entry> entries;
    for (std::size_t j = 0; j < box.size(); ++j) {
        for (const auto& [s, cs] : xs.terms())
            entries.push_back({row_index(box[j] * s), j, cs});
        for (const auto& [t, ct] : ys.terms())
            entries.push_back({row_index(box[j] * t), box.size() + j, ct});
    }
    Matrix m(row_of.size(), 2 * box.size());
    for (const Entry& e : entries) m.at(e.row, e.col) = dom.add(m.at(e.row, e.col), e.value);

    LinSolveResult sol = solve_linear(dom, std::move(m), std::vector<Coeff>(row_of.size(), Coeff(0)));
    if (sol.kernel.empty()) return {SearchStatus::none_at_budget, std::nullopt};

    const std::vector<Coeff>& v = sol.kernel.front();
    Coeff lead(0);
    for (const Coeff& c : v)
        if (c != 0) {
            lead = c;
            break;
        }
    Coeff scale = dom.inv(lead);

    RingElement a(dom, alpha), b(dom, alpha);
    for (std::size_t j = 0; j < box.size(); ++j) {
        a.accumulate(box[j], dom.mul(v[j], scale));
        b.accumulate(box[j], dom.mul(v[box.size() + j], scale));
    }
    // Back to the original frame: a~*(gx^-1 x) = (a~ gx^-1)*x.
    a = a * RingElement::monomial(dom, alpha, Rat(1), gx.inverse());
    b = b * RingElement::monomial(dom, alpha, Rat(1), gy.inverse());

    if (a.is_zero() || b.is_zero())
        throw std::logic_error("relation search produced a one-sided relation for nonzero inputs");
    if (!verify_relation(x, y, Relation{a, b}))
        throw std::logic_error("relation search produced an invalid relation");
    return {SearchStatus::found, Relation{std::move(a), std::move(b)}};
}

RingElement unit_normalize(const RingElement& x) {
    if (x.is_zero()) throw std::invalid_argument("cannot normalize the zero element");
    const auto& [w, c] = *x.terms().begin(); // shortlex-smallest support word
    RingElement unit_inv =
        RingElement::monomial(x.domain(), x.alphabet(), x.domain().inv(c), w.inverse());
    return unit_inv * x;
}

EuclidResult euclid(const RingElement& x, const RingElement& y, const Relation& rel,
                    std::size_t budget) {
    if (x.is_zero() || y.is_zero()) throw std::invalid_argument("euclid needs nonzero elements");
    if (!verify_relation(x, y, rel)) throw std::invalid_argument("relation does not annihilate (x, y)");
    const CoeffDomain& dom = x.domain();
    if (!dom.is_field()) throw std::invalid_argument("euclid requires a field domain");

    RingElement one = RingElement::one(dom, x.alphabet());
    RingElement nil = RingElement::zero(dom, x.alphabet());

    RingElement s = x, t = y;
    RingElement us = one, vs = nil, ut = nil, vt = one;
    Relation carried = rel;

    EuclidResult out{nil, nil, nil, nil, nil, {}};
    while (true) {
        DivisionResult dr = divide(s, t, carried);
        out.chain.push_back({s, t, dr.quotient, dr.remainder, carried});
        if (dr.remainder.is_zero()) break;
        // New pair (t, r) carries (beta + alpha*q, alpha); alpha cannot
        // degenerate to zero for a nonzero remainder over a field.
        RingElement alpha_next = carried.b + carried.a * dr.quotient;
        if (alpha_next.is_zero())
            throw std::logic_error("relation degenerated mid-chain");
        RingElement ur = us - dr.quotient * ut;
        RingElement vr = vs - dr.quotient * vt;
        s = t;
        t = dr.remainder;
        us = ut;
        vs = vt;
        ut = std::move(ur);
        vt = std::move(vr);
        carried = Relation{std::move(alpha_next), carried.a};
    }

    // Unit-normalize the gcd for reporting and push the unit through the
    // certificates: z = (lam gam) z_c, so bezout picks up (lam gam)^-1 on
    // the left and cofactors pick up (lam gam) on the right.
    const auto& [gam, lam] = *t.terms().begin();
    RingElement unit = RingElement::monomial(dom, x.alphabet(), lam, gam);
    RingElement unit_inv =
        RingElement::monomial(dom, x.alphabet(), dom.inv(lam), gam.inverse());
    out.gcd = unit_inv * t;
    out.bezout_x = unit_inv * ut;
    out.bezout_y = unit_inv * vt;

    ExactDivideResult cx = exact_divide(x, t, budget);
    ExactDivideResult cy = exact_divide(y, t, budget);
    if (cx.status != SearchStatus::found || cy.status != SearchStatus::found)
        throw std::logic_error("euclid: chain gcd does not divide an input");
    out.cofactor_x = *cx.quotient * unit;
    out.cofactor_y = *cy.quotient * unit;

    // Ideal equality, both directions.
    if (!(out.bezout_x * x + out.bezout_y * y == out.gcd))
        throw std::logic_error("euclid: Bezout identity failed");
    if (!(out.cofactor_x * out.gcd == x) || !(out.cofactor_y * out.gcd == y))
        throw std::logic_error("euclid: cofactor identity failed");
    return out;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Word random_word(std::mt19937_64& rng, const Alphabet& alpha, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    int len = len_dist(rng);
    std::vector<Letter> raw;
    std::uniform_int_distribution<int> gen_dist(1, alpha.rank());
    std::uniform_int_distribution<int> sign_dist(0, 1);
    while (static_cast<int>(raw.size()) < len) {
        Letter s = static_cast<Letter>(gen_dist(rng) * (sign_dist(rng) ? 1 : -1));
        if (!raw.empty() && raw.back() == static_cast<Letter>(-s)) continue;
        raw.push_back(s);
    }
    return Word::from_reduced(std::move(raw));
}

Rat random_nonzero_coeff(std::mt19937_64& rng, const CoeffDomain& dom) {
    if (dom.kind() == CoeffDomain::Kind::prime_field) {
        std::uniform_int_distribution<std::uint64_t> d(1, dom.prime() - 1);
        return Rat(d(rng));
    }
    std::uniform_int_distribution<int> d(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    int v = d(rng) * (sign(rng) ? 1 : -1);
    return Rat(v);
}

RingElement random_element(std::mt19937_64& rng, const CoeffDomain& dom, const Alphabet& alpha,
                           int max_terms, int max_len) {
    std::uniform_int_distribution<int> terms_dist(1, max_terms);
    int n = terms_dist(rng);
    RingElement out(dom, alpha);
    for (int i = 0; i < n; ++i)
        out.accumulate(random_word(rng, alpha, max_len), random_nonzero_coeff(rng, dom));
    return out;
}

} // namespace

PairSpec generate_pair(std::uint64_t seed, int depth, const CoeffDomain& domain,
                       const Alphabet& alphabet, const GenBounds& bounds) {
    if (depth < 1) throw std::invalid_argument("generate_pair needs depth >= 1");
    if (!domain.is_field()) throw std::invalid_argument("generate_pair requires a field domain");

    for (std::uint64_t attempt = 0; attempt < 500; ++attempt) {
        std::mt19937_64 rng(mix64(seed) ^ mix64(attempt * 0x51ed2701u + 17));

        RingElement z0 = random_element(rng, domain, alphabet, bounds.max_seed_terms,
                                        bounds.max_seed_len);
        if (z0.is_zero()) continue;
        RingElement a = random_element(rng, domain, alphabet, bounds.max_factor_terms,
                                       bounds.max_factor_len);
        if (a.is_zero()) continue;

        PairSpec spec{z0, a * z0,
                      Relation{a, -RingElement::one(domain, alphabet)},
                      z0,
                      {}};
        spec.script.push_back("z0 = " + format_element(z0));
        spec.script.push_back("(x, y) = (z0, (" + format_element(a) + ")*z0)");

        bool ok = true;
        for (int step = 2; step <= depth; ++step) {
            RingElement f = random_element(rng, domain, alphabet, bounds.max_factor_terms,
                                           bounds.max_factor_len);
            if (step % 2 == 0) {
                // (x, y) <- (x + u*y, y) keeps a and shifts b by -a*u.
                spec.x = spec.x + f * spec.y;
                spec.rel.b = spec.rel.b - spec.rel.a * f;
                spec.script.push_back("x += (" + format_element(f) + ")*y");
            } else {
                spec.y = spec.y + f * spec.x;
                spec.rel.a = spec.rel.a - spec.rel.b * f;
                spec.script.push_back("y += (" + format_element(f) + ")*x");
            }
            if (spec.x.is_zero() || spec.y.is_zero()) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (spec.x.is_zero() || spec.y.is_zero()) continue;
        if (spec.rel.a.is_zero() || spec.rel.b.is_zero()) continue;
        if (static_cast<int>(spec.x.term_count()) > bounds.max_support ||
            static_cast<int>(spec.y.term_count()) > bounds.max_support)
            continue;
        if (diameter2(spec.x) > bounds.max_diameter2 || diameter2(spec.y) > bounds.max_diameter2)
            continue;
        if (!verify_relation(spec.x, spec.y, spec.rel))
            throw std::logic_error("generated relation failed verification");
        return spec;
    }
    throw std::runtime_error("generate_pair: bounds too tight, generation starved");
}

} // namespace gring
