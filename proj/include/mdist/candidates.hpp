#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "mdist/presentation.hpp"
#include "mdist/rational.hpp"

namespace mdist {

enum class PlaneKind : std::uint8_t { p_shift, s_slope, s0, s1, h_level };

/// Plane n_a * a + n_b * b + n_l * lambda = d in (a, b, lambda)-space.
struct Plane {
    Rational n_a;
    Rational n_b;
    Rational n_l;
    Rational d;
    PlaneKind kind = PlaneKind::p_shift;
    std::uint32_t h = 0;
    std::uint32_t h2 = 0;
    int shift = 0;

    /// Horizontal: of the form lambda = level.
    [[nodiscard]] bool is_horizontal() const { return n_a.is_zero() && n_b.is_zero(); }
    [[nodiscard]] bool contains(const Rational& a, const Rational& b, const Rational& lambda) const {
        return n_a * a + n_b * b + n_l * lambda == d;
    }
    /// Same equation up to a nonzero factor.
    [[nodiscard]] bool same_geometry(const Plane& o) const;
};

/// Half-open (lo, hi].
struct LevelInterval {
    Rational lo;
    ExtRational hi;

    [[nodiscard]] bool contains(const Rational& x) const { return lo < x && ExtRational(x) <= hi; }
};

/// All shift, slope and level planes for the element grades, deduplicated
/// by geometry (first provenance kept), in a deterministic order.
std::vector<Plane> build_planes(std::span<const Grade> grades);

/// Sorted distinct positive levels of the vertices of the arrangement that lie on `p`.
std::vector<Rational> vertices_on_plane(const Plane& p, std::span<const Plane> planes);
/// Same result computed without threads.
std::vector<Rational> vertices_on_plane_serial(const Plane& p, std::span<const Plane> planes);

using Decider = std::function<bool(const Rational&)>;

/// The gap (c_i, c_{i+1}] of consecutive vertex levels on `p` (with 0 and
/// infinity appended) that contains the threshold of the monotone `decide`.
/// Requires decide(0) false.
LevelInterval compute_I_P(const Plane& p, std::span<const Plane> planes, const Decider& decide);

/// True iff no vertex on `p` has a level strictly inside (iv.lo, iv.hi).
bool decide_inclusion(const Plane& p, const LevelInterval& iv, std::span<const Plane> planes);

bool is_zero(const Presentation& q, const Presentation& q2);
bool is_infinite(const Presentation& q, const Presentation& q2);

struct SideStats {
    std::size_t planes = 0;
    std::size_t compute_ip_calls = 0;
    std::size_t decisions = 0;  // decide_leq_oneside runs, memo hits excluded
    bool zero = false;
    Rational alpha;  // final interval (alpha, beta]; both 0 when zero
    Rational beta;
};

struct DistanceResult {
    ExtRational value;
    SideStats low;      // slopes at most one
    SideStats swapped;  // coordinate-swapped side
};

/// Exact matching distance by the randomized incremental interval scheme.
DistanceResult matching_distance_stats(const Presentation& q, const Presentation& q2, std::uint64_t seed);
inline ExtRational matching_distance(const Presentation& q, const Presentation& q2, std::uint64_t seed) {
    return matching_distance_stats(q, q2, seed).value;
}

/// Fisher-Yates with rejection sampling, so a seed gives the same
/// permutation on every standard library.
std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace mdist
