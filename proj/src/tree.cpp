#include "gring/tree.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

namespace gring {

TreePoint TreePoint::vertex(Word w) {
    TreePoint p;
    p.base_ = std::move(w);
    p.step_ = 0;
    return p;
}

TreePoint TreePoint::edge_midpoint(Word base, Letter step) {
    if (step == 0) throw std::invalid_argument("edge step letter must be nonzero");
    TreePoint p;
    Word far = base * Word::generator(std::abs(static_cast<int>(step)), step < 0);
    if (far.length() < base.length()) {
        // Normal form anchors the shorter endpoint.
        p.base_ = std::move(far);
        p.step_ = static_cast<Letter>(-step);
    } else {
        p.base_ = std::move(base);
        p.step_ = step;
    }
    return p;
}

Letter TreePoint::step() const {
    if (is_vertex()) throw std::logic_error("vertex has no edge step");
    return step_;
}

Word TreePoint::far_endpoint() const {
    if (is_vertex()) throw std::logic_error("vertex has no far endpoint");
    return base_ * Word::generator(std::abs(static_cast<int>(step_)), step_ < 0);
}

Dist2 dist2(const TreePoint& p, const TreePoint& q) {
    if (p.is_vertex() && q.is_vertex()) return dist2(p.base(), q.base());
    if (p.is_vertex() && !q.is_vertex()) {
        Dist2 a = dist2(p.base(), q.base());
        Dist2 b = dist2(p.base(), q.far_endpoint());
        return std::min(a, b) + 1;
    }
    if (!p.is_vertex() && q.is_vertex()) return dist2(q, p);
    if (p == q) return 0;
    Word pf = p.far_endpoint();
    Word qf = q.far_endpoint();
    Dist2 best = std::min(std::min(dist2(p.base(), q.base()), dist2(p.base(), qf)),
                          std::min(dist2(pf, q.base()), dist2(pf, qf)));
    return best + 2;
}

TreePoint translate(const Word& g, const TreePoint& p) {
    if (p.is_vertex()) return TreePoint::vertex(g * p.base());
    return TreePoint::edge_midpoint(g * p.base(), p.step());
}

namespace {

// Endpoint of the midpoint m nearer to the target point t.  The two
// endpoint distances always differ, so the choice is unambiguous.
Word nearer_endpoint(const TreePoint& m, const TreePoint& t) {
    Word b = m.base();
    Word f = m.far_endpoint();
    Dist2 db = dist2(TreePoint::vertex(b), t);
    Dist2 df = dist2(TreePoint::vertex(f), t);
    return db <= df ? b : f;
}

} // namespace

TreePoint geodesic_tree_point(const TreePoint& from, const TreePoint& to, Dist2 t2) {
    Dist2 total = dist2(from, to);
    if (t2 < 0 || t2 > total)
        throw std::domain_error("geodesic parameter out of range");
    if (t2 == 0) return from;
    if (t2 == total) return to;

    Word v0 = from.is_vertex() ? from.base() : nearer_endpoint(from, to);
    Dist2 off0 = from.is_vertex() ? 0 : 1;
    Word v1 = to.is_vertex() ? to.base() : nearer_endpoint(to, from);
    Dist2 off1 = to.is_vertex() ? 0 : 1;

    Word chain = v0.inverse() * v1;
    assert(total == off0 + 2 * static_cast<Dist2>(chain.length()) + off1);

    Dist2 g2 = t2 - off0;
    assert(g2 >= 0 && g2 <= 2 * static_cast<Dist2>(chain.length()));
    if (g2 % 2 == 0)
        return TreePoint::vertex(v0 * chain.prefix(static_cast<std::size_t>(g2 / 2)));
    std::size_t i = static_cast<std::size_t>((g2 - 1) / 2);
    return TreePoint::edge_midpoint(v0 * chain.prefix(i), chain.letter(i));
}

TreePoint midpoint(const TreePoint& p, const TreePoint& q) {
    Dist2 total = dist2(p, q);
    if (total % 2 != 0)
        throw std::domain_error("midpoint undefined: odd doubled distance (quarter-edge)");
    return geodesic_tree_point(p, q, total / 2);
}

DiameterInfo diameter2_of(std::span<const Word> pts) {
    if (pts.empty()) throw std::invalid_argument("diameter of empty set");
    // Double sweep: farthest from an arbitrary point, then farthest from that.
    auto farthest_from = [&](const Word& w) {
        std::size_t best = 0;
        Dist2 bd = -1;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Dist2 d = dist2(w, pts[i]);
            if (d > bd) {
                bd = d;
                best = i;
            }
        }
        return std::pair<std::size_t, Dist2>(best, bd);
    };
    auto [i, d1] = farthest_from(pts[0]);
    auto [j, d2] = farthest_from(pts[i]);
    DiameterInfo info;
    info.diameter2 = d2;
    info.first = pts[i];
    info.second = pts[j];
    return info;
}

Ball smallest_ball(std::span<const Word> pts) {
    DiameterInfo diam = diameter2_of(pts);
    Ball ball;
    ball.center = midpoint(TreePoint::vertex(diam.first), TreePoint::vertex(diam.second));
    ball.radius2 = diam.diameter2 / 2;

    bool tight = false;
    for (const Word& w : pts) {
        Dist2 d = dist2(TreePoint::vertex(w), ball.center);
        if (d > ball.radius2)
            throw std::logic_error("smallest_ball: containment postcondition failed");
        if (d == ball.radius2) tight = true;
    }
    if (!tight) throw std::logic_error("smallest_ball: no point on the boundary sphere");

#ifndef NDEBUG
    // Tree centers are unique: every diametral pair yields the same midpoint.
    if (pts.size() <= 48) {
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b)
                if (dist2(pts[a], pts[b]) == diam.diameter2)
                    assert(midpoint(TreePoint::vertex(pts[a]), TreePoint::vertex(pts[b])) ==
                           ball.center);
    }
#endif
    return ball;
}

namespace {

// Breadth-first expansion from `root`.  `forbidden_first` suppresses one
// outgoing direction at the root (0 = none); `shell_only` keeps just the
// final level.  Every generated vertex is distinct because the walk never
// backtracks.
void bfs_collect(const Word& root, int rank, std::size_t max_depth, Letter forbidden_first,
                 bool shell_only, std::size_t budget, std::vector<Word>& out) {
    struct Item {
        Word w;
        Letter arrived;
    };
    std::vector<Item> level{{root, 0}};
    if (!shell_only || max_depth == 0) {
        out.push_back(root);
        if (out.size() > budget) throw BudgetExceeded("ball enumeration budget exceeded");
    }
    for (std::size_t depth = 1; depth <= max_depth; ++depth) {
        std::vector<Item> next;
        next.reserve(level.size() * static_cast<std::size_t>(2 * rank - 1));
        for (const Item& it : level) {
            for (int g = 1; g <= rank; ++g) {
                for (int sign : {+1, -1}) {
                    Letter s = static_cast<Letter>(sign * g);
                    if (it.arrived != 0 && s == static_cast<Letter>(-it.arrived)) continue;
                    if (depth == 1 && forbidden_first != 0 && s == forbidden_first) continue;
                    Word w = it.w * Word::generator(g, sign < 0);
                    if (!shell_only || depth == max_depth) {
                        out.push_back(w);
                        if (out.size() > budget)
                            throw BudgetExceeded("ball enumeration budget exceeded");
                    }
                    next.push_back({std::move(w), s});
                }
            }
        }
        level = std::move(next);
    }
}

} // namespace

std::vector<Word> ball_vertices(const Ball& ball, int rank, std::size_t budget) {
    std::vector<Word> out;
    if (ball.radius2 < 0) return out;
    if (ball.center.is_vertex()) {
        std::size_t k = static_cast<std::size_t>(ball.radius2 / 2);
        bfs_collect(ball.center.base(), rank, k, 0, false, budget, out);
    } else {
        if (ball.radius2 == 0) return out;
        std::size_t k = static_cast<std::size_t>((ball.radius2 - 1) / 2);
        bfs_collect(ball.center.base(), rank, k, 0, false, budget, out);
        // Far-side shell: vertices at exactly k from the far endpoint whose
        // geodesic avoids the base endpoint.  Everything nearer is already
        // inside the base ball.
        bfs_collect(ball.center.far_endpoint(), rank, k, static_cast<Letter>(-ball.center.step()),
                    true, budget, out);
    }
    std::sort(out.begin(), out.end(), ShortlexLess{});
    return out;
}

std::size_t ball_vertex_count_bound(bool center_is_vertex, Dist2 r2, int rank) {
    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max() / 4;
    if (r2 < 0) return 0;
    std::size_t branch = static_cast<std::size_t>(2 * rank - 1);
    auto sat_add = [&](std::size_t a, std::size_t b) { return (a > cap - b) ? cap : a + b; };
    auto sat_mul = [&](std::size_t a, std::size_t b) { return (b != 0 && a > cap / b) ? cap : a * b; };

    if (center_is_vertex) {
        std::size_t k = static_cast<std::size_t>(r2 / 2);
        std::size_t total = 1;
        std::size_t level = static_cast<std::size_t>(2 * rank);
        for (std::size_t j = 1; j <= k; ++j) {
            total = sat_add(total, level);
            level = sat_mul(level, branch);
        }
        return total;
    }
    if (r2 == 0) return 0;
    std::size_t k = static_cast<std::size_t>((r2 - 1) / 2);
    std::size_t total = ball_vertex_count_bound(true, static_cast<Dist2>(2 * k), rank);
    std::size_t shell = 1;
    for (std::size_t j = 0; j < k; ++j) shell = sat_mul(shell, branch);
    return sat_add(total, shell);
}

} // namespace gring
