#include "mdist/candidates.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "mdist/decision.hpp"
#include "mdist/matching.hpp"
#include "mdist/persistence.hpp"

namespace mdist {

namespace {

struct Vec3 {
    Rational x, y, z;
};

Vec3 normal(const Plane& p) { return {p.n_a, p.n_b, p.n_l}; }

Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

Rational dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

bool is_zero_vec(const Vec3& v) { return v.x.is_zero() && v.y.is_zero() && v.z.is_zero(); }

// Scaled so that the first nonzero normal coefficient is one.
std::tuple<Rational, Rational, Rational, Rational> normalized(const Plane& p) {
    const Rational& lead = !p.n_a.is_zero() ? p.n_a : (!p.n_b.is_zero() ? p.n_b : p.n_l);
    return {p.n_a / lead, p.n_b / lead, p.n_l / lead, p.d / lead};
}

struct PlaneKeyHash {
    std::size_t operator()(const std::tuple<Rational, Rational, Rational, Rational>& t) const noexcept {
        std::size_t h = std::get<0>(t).hash();
        h = h * 1000003U ^ std::get<1>(t).hash();
        h = h * 1000003U ^ std::get<2>(t).hash();
        return h * 1000003U ^ std::get<3>(t).hash();
    }
};

}  // namespace

bool Plane::same_geometry(const Plane& o) const { return normalized(*this) == normalized(o); }

std::vector<Plane> build_planes(std::span<const Grade> grades) {
    std::vector<Plane> all;
    const auto n = static_cast<std::uint32_t>(grades.size());
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (int k = -2; k <= 2; ++k)
                all.push_back({grades[i].x, 1, Rational(-k), grades[j].y, PlaneKind::p_shift, i, j, k});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const Rational dx = (grades[i].x - grades[j].x).abs();
            if (dx.is_zero()) continue;
            for (const int k : {1, 2}) all.push_back({dx, 0, Rational(-k), 0, PlaneKind::s_slope, i, j, k});
        }
    all.push_back({1, 0, 0, 0, PlaneKind::s0, 0, 0, 0});
    all.push_back({1, 0, 0, 1, PlaneKind::s1, 0, 0, 0});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) {
            const Rational dy = (grades[i].y - grades[j].y).abs();
            all.push_back({0, 0, 1, dy, PlaneKind::h_level, i, j, 1});
            all.push_back({0, 0, 1, dy / Rational(2), PlaneKind::h_level, i, j, 2});
        }

    std::vector<Plane> out;
    std::unordered_set<std::tuple<Rational, Rational, Rational, Rational>, PlaneKeyHash> seen;
    for (auto& p : all)
        if (seen.insert(normalized(p)).second) out.push_back(std::move(p));
    return out;
}

namespace {

std::vector<Rational> plane_levels(const Plane& p, std::span<const Plane> planes, bool parallel) {
    const auto np = normal(p);
    const auto count = static_cast<std::int64_t>(planes.size());
    std::vector<Vec3> u(planes.size());
    for (std::size_t j = 0; j < planes.size(); ++j) u[j] = cross(np, normal(planes[j]));

    std::vector<Rational> out;
#pragma omp parallel if (parallel)
    {
        std::vector<Rational> local;
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t j = 0; j < count; ++j) {
            const auto& pj = planes[static_cast<std::size_t>(j)];
            const auto& uj = u[static_cast<std::size_t>(j)];
            if (is_zero_vec(uj)) continue;
            for (std::size_t k = static_cast<std::size_t>(j) + 1; k < planes.size(); ++k) {
                const auto& pk = planes[k];
                const Rational det = dot(uj, normal(pk));
                if (det.is_zero()) continue;
                // Cramer's rule for the lambda coordinate.
                const Rational jk = pj.n_a * pk.n_b - pj.n_b * pk.n_a;
                const Rational num = p.d * jk - pj.d * u[k].z + pk.d * uj.z;
                Rational level = num / det;
                if (level.sign() > 0) local.push_back(std::move(level));
            }
        }
#pragma omp critical
        out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<Rational> vertices_on_plane(const Plane& p, std::span<const Plane> planes) {
    return plane_levels(p, planes, true);
}

std::vector<Rational> vertices_on_plane_serial(const Plane& p, std::span<const Plane> planes) {
    return plane_levels(p, planes, false);
}

LevelInterval compute_I_P(const Plane& p, std::span<const Plane> planes, const Decider& decide) {
    const auto levels = vertices_on_plane(p, planes);
    // Index 0 stands for level 0, index K+1 for infinity.
    auto level = [&](std::size_t i) { return i == 0 ? Rational(0) : levels[i - 1]; };
    std::size_t lo = 0, hi = levels.size() + 1;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (decide(level(mid)))
            hi = mid;
        else
            lo = mid;
    }
    return {level(lo), hi == levels.size() + 1 ? ExtRational::infinity() : ExtRational(level(hi))};
}

namespace {

// Position along the line P_lambda of the point where the slanted line P ∩ Q
// meets level lambda, as t0 + t1 * lambda.
struct Track {
    Rational t0, t1;
    std::size_t index;
};

// With P fixed, t = -p.n_b * a + p.n_a * b at the point of P ∩ Q on level
// lambda, solved in closed form.
Track slanted_track(const Plane& p, const Plane& q, const Rational& det, const Rational& norm2, std::size_t index) {
    const Rational c = p.n_a * q.n_a + p.n_b * q.n_b;
    return {(q.d * norm2 - p.d * c) / det, (p.n_l * c - q.n_l * norm2) / det, index};
}

}  // namespace

bool decide_inclusion(const Plane& p, const LevelInterval& iv, std::span<const Plane> planes) {
    auto strictly_inside = [&](const Rational& x) { return iv.lo < x && ExtRational(x) < iv.hi; };
    if (p.is_horizontal()) return !strictly_inside(p.d / p.n_l);

    const auto np = normal(p);
    const Rational norm2 = p.n_a * p.n_a + p.n_b * p.n_b;
    std::vector<Track> tracks;
    for (std::size_t k = 0; k < planes.size(); ++k) {
        const auto& q = planes[k];
        const auto dir = cross(np, normal(q));
        if (is_zero_vec(dir)) continue;  // parallel or identical
        const Rational det = p.n_a * q.n_b - p.n_b * q.n_a;
        if (!det.is_zero()) {
            tracks.push_back(slanted_track(p, q, det, norm2, k));
            continue;
        }
        // Straight: P ∩ Q is horizontal. Normals agree in (a, b) up to a factor f.
        const Rational f = p.n_a.is_zero() ? q.n_b / p.n_b : q.n_a / p.n_a;
        const Rational level = (q.d - f * p.d) / (q.n_l - f * p.n_l);
        if (!strictly_inside(level)) continue;
        for (const auto& r : planes)
            if (!dot(normal(r), dir).is_zero()) return false;
    }

    // Two slanted lines cross strictly inside the slab iff their order swaps.
    const Rational& alpha = iv.lo;
    auto key_alpha = [&](const Track& t) { return t.t0 + t.t1 * alpha; };
    std::vector<std::pair<Rational, Rational>> at_alpha(tracks.size());
    std::vector<std::pair<Rational, Rational>> at_beta(tracks.size());
    for (std::size_t k = 0; k < tracks.size(); ++k) {
        at_alpha[k] = {key_alpha(tracks[k]), 0};
        if (iv.hi.is_finite())
            at_beta[k] = {tracks[k].t0 + tracks[k].t1 * iv.hi.value(), 0};
        else
            at_beta[k] = {tracks[k].t1, tracks[k].t0};
    }
    std::vector<std::size_t> by_alpha(tracks.size()), by_beta(tracks.size());
    std::iota(by_alpha.begin(), by_alpha.end(), 0);
    std::iota(by_beta.begin(), by_beta.end(), 0);
    std::sort(by_alpha.begin(), by_alpha.end(), [&](std::size_t x, std::size_t y) {
        return std::tie(at_alpha[x], at_beta[x], x) < std::tie(at_alpha[y], at_beta[y], y);
    });
    std::sort(by_beta.begin(), by_beta.end(), [&](std::size_t x, std::size_t y) {
        return std::tie(at_beta[x], at_alpha[x], x) < std::tie(at_beta[y], at_alpha[y], y);
    });
    return by_alpha == by_beta;
}

bool is_zero(const Presentation& q, const Presentation& q2) { return decide_leq(q, q2, 0); }

bool is_infinite(const Presentation& q, const Presentation& q2) {
    const DualPoint s{1, 0};
    auto at = [&](const Presentation& a, const Presentation& b) {
        const auto x = slice_barcode(a, s);
        const auto y = slice_barcode(b, s);
        return bottleneck_distance(std::span<const Interval>(x), std::span<const Interval>(y)).is_infinite();
    };
    return at(q, q2) || at(swap_coordinates(q), swap_coordinates(q2));
}

std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i-- > 1;) {
        const std::uint64_t range = i + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t x;
        do x = rng();
        while (x >= limit);
        std::swap(perm[i], perm[static_cast<std::size_t>(x % range)]);
    }
    return perm;
}

namespace {

Rational side_distance(const Presentation& q, const Presentation& q2, std::mt19937_64& rng, SideStats& st) {
    ++st.decisions;
    if (decide_leq_oneside(q, q2, 0)) {
        st.zero = true;
        return 0;
    }
    const auto grades = element_grades(q, q2);
    const auto planes = build_planes(grades);
    st.planes = planes.size();

    LevelInterval iv{0, ExtRational::infinity()};
    std::map<Rational, bool> memo;
    const Decider decide = [&](const Rational& c) {
        // Everything at or below lo is known false, at or above hi known true.
        if (c <= iv.lo) return false;
        if (ExtRational(c) >= iv.hi) return true;
        if (const auto it = memo.find(c); it != memo.end()) return it->second;
        ++st.decisions;
        const bool r = decide_leq_oneside(q, q2, c);
        memo.emplace(c, r);
        return r;
    };

    for (const auto idx : random_permutation(planes.size(), rng)) {
        const auto& p = planes[idx];
        if (decide_inclusion(p, iv, planes)) continue;
        ++st.compute_ip_calls;
        const auto ip = compute_I_P(p, planes, decide);
        if (ip.lo > iv.lo) iv.lo = ip.lo;
        if (ip.hi < iv.hi) iv.hi = ip.hi;
    }
    if (iv.hi.is_infinite()) throw std::logic_error("matching distance: no finite vertex level bounds the distance");
    st.alpha = iv.lo;
    st.beta = iv.hi.value();
    return iv.hi.value();
}

}  // namespace

DistanceResult matching_distance_stats(const Presentation& q, const Presentation& q2, std::uint64_t seed) {
    DistanceResult r;
    if (is_infinite(q, q2)) {
        r.value = ExtRational::infinity();
        return r;
    }
    std::mt19937_64 rng(seed);
    const Rational low = side_distance(q, q2, rng, r.low);
    const Rational high = side_distance(swap_coordinates(q), swap_coordinates(q2), rng, r.swapped);
    r.value = max(low, high);
    return r;
}

}  // namespace mdist
