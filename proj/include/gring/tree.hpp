#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "gring/words.hpp"

namespace gring {

/// Doubled tree distance.  Doubling keeps every distance and radius an
/// integer: vertex-vertex distances are even, vertex-midpoint distances
/// are odd, and the tree identity radius = diameter/2 never leaves the
/// integers.
using Dist2 = std::int64_t;

/// A point of the geometric realization of the Cayley tree: either a
/// vertex or the midpoint of an edge.  Midpoints are stored in the
/// normal form (base, step) where base*step is longer than base, so
/// equality is structural.
class TreePoint {
public:
    static TreePoint vertex(Word w);
    static TreePoint edge_midpoint(Word base, Letter step);

    bool is_vertex() const noexcept { return step_ == 0; }
    const Word& base() const noexcept { return base_; }
    /// Step letter toward the longer endpoint; midpoints only.
    Letter step() const;
    /// The longer endpoint base*step; midpoints only.
    Word far_endpoint() const;

    bool operator==(const TreePoint&) const = default;

private:
    Word base_;
    Letter step_{0};
};

Dist2 dist2(const TreePoint& p, const TreePoint& q);
inline Dist2 dist2(const Word& u, const Word& v) {
    std::size_t k = common_prefix_length(u, v);
    return 2 * static_cast<Dist2>((u.length() - k) + (v.length() - k));
}

TreePoint translate(const Word& g, const TreePoint& p);

/// The point at doubled distance t2 from `from` on the geodesic to `to`.
/// t2 must lie in [0, dist2(from, to)] and land on a vertex or midpoint
/// (any integer t2 does).
TreePoint geodesic_tree_point(const TreePoint& from, const TreePoint& to, Dist2 t2);

/// Midpoint of the geodesic; throws std::domain_error when dist2 is odd
/// (the midpoint would fall at a quarter-edge).
TreePoint midpoint(const TreePoint& p, const TreePoint& q);

struct DiameterInfo {
    Dist2 diameter2{0};
    Word first, second; // a witness pair realizing the diameter
};

/// Doubled diameter of a nonempty vertex set via the tree double sweep.
DiameterInfo diameter2_of(std::span<const Word> pts);

struct Ball {
    TreePoint center;
    Dist2 radius2{0};
};

/// Smallest ball containing a nonempty vertex set: center = midpoint of
/// a diametral pair, radius2 = diameter2/2.  Containment and tightness
/// are asserted; debug builds also check the center does not depend on
/// the diametral pair.
Ball smallest_ball(std::span<const Word> pts);

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultBallBudget = 200000;

/// All vertices within ball.radius2 of ball.center, in shortlex order.
/// Throws BudgetExceeded once the count passes `budget`.
std::vector<Word> ball_vertices(const Ball& ball, int rank, std::size_t budget = kDefaultBallBudget);

/// Upper bound on the number of vertices within doubled radius r2 of a
/// point of the given kind, saturating at a large cap.
std::size_t ball_vertex_count_bound(bool center_is_vertex, Dist2 r2, int rank);

} // namespace gring
