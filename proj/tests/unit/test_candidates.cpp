#include <doctest.h>

#include <set>

#include "../support/fixtures.hpp"
#include "../support/instances.hpp"
#include "mdist/candidates.hpp"
#include "mdist/decision.hpp"

using namespace mdist;
using mdist::testing::Rng;
using mdist::testing::uniform;

namespace {

std::vector<Grade> random_grades(Rng& rng, std::size_t n) {
    std::vector<Grade> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back({Rational(uniform(rng, 0, 5)), Rational(uniform(rng, 0, 5))});
    return g;
}

// Levels of all triple intersections involving p, by direct 3x3 solves.
std::set<Rational> brute_levels(const Plane& p, const std::vector<Plane>& planes) {
    std::set<Rational> out;
    for (std::size_t j = 0; j < planes.size(); ++j)
        for (std::size_t k = j + 1; k < planes.size(); ++k) {
            const Plane* r[3] = {&p, &planes[j], &planes[k]};
            auto det3 = [&](auto col) {
                Rational m[3][3];
                for (int i = 0; i < 3; ++i) {
                    m[i][0] = r[i]->n_a;
                    m[i][1] = r[i]->n_b;
                    m[i][2] = r[i]->n_l;
                    m[i][col] = r[i]->d;
                }
                return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            };
            Rational m[3][3];
            for (int i = 0; i < 3; ++i) {
                m[i][0] = r[i]->n_a;
                m[i][1] = r[i]->n_b;
                m[i][2] = r[i]->n_l;
            }
            const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            if (det.is_zero()) continue;
            const Rational lam = det3(2) / det;
            if (lam.sign() > 0) {
                const Rational a = det3(0) / det, b = det3(1) / det;
                for (const auto* x : r) REQUIRE(x->contains(a, b, lam));
                out.insert(lam);
            }
        }
    return out;
}

}  // namespace

TEST_CASE("the example triple meets at level two") {
    // The line b = -a + 3 against the slope plane 2a = lambda and the slice a = 1.
    const Plane p{1, 1, 0, 3, PlaneKind::p_shift, 0, 0, 0};
    const Plane slope{2, 0, -1, 0, PlaneKind::s_slope, 0, 1, 1};
    const Plane s1{1, 0, 0, 1, PlaneKind::s1, 0, 0, 0};
    const std::vector<Plane> planes{slope, s1};
    const auto levels = vertices_on_plane(p, planes);
    REQUIRE(levels.size() == 1);
    CHECK(levels[0] == Rational(2));
}

TEST_CASE("plane vertices match brute force, threaded and serial alike") {
    Rng rng(21);
    for (int it = 0; it < 12; ++it) {
        const auto planes = build_planes(random_grades(rng, static_cast<std::size_t>(uniform(rng, 1, 4))));
        for (std::size_t i = 0; i < planes.size(); i += 3) {
            const auto lv = vertices_on_plane(planes[i], planes);
            CHECK(lv == vertices_on_plane_serial(planes[i], planes));
            const auto b = brute_levels(planes[i], planes);
            CHECK(std::vector<Rational>(b.begin(), b.end()) == lv);
        }
    }
}

TEST_CASE("planes are deduplicated by geometry") {
    std::vector<Grade> g{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    const auto planes = build_planes(g);
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j) CHECK_FALSE(planes[i].same_geometry(planes[j]));
}

TEST_CASE("compute_I_P brackets the threshold of a stub decider") {
    // Horizontal-free plane whose vertices sit at levels 1, 2 and 5.
    const Plane p{0, 1, 0, 0};
    const std::vector<Plane> planes{{1, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 2}, {0, 0, 1, 5}, {0, 0, 1, -3}};
    REQUIRE(vertices_on_plane(p, planes) == std::vector<Rational>{1, 2, 5});
    auto at = [&](Rational d) { return compute_I_P(p, planes, [d](const Rational& x) { return x >= d; }); };
    auto iv = at(2);
    CHECK(iv.lo == Rational(1));
    CHECK(iv.hi == ExtRational(2));
    iv = at(Rational(3, 2));
    CHECK(iv.lo == Rational(1));
    CHECK(iv.hi == ExtRational(2));
    iv = at(7);
    CHECK(iv.lo == Rational(5));
    CHECK(iv.hi.is_infinite());
    iv = at(Rational(1, 2));
    CHECK(iv.lo == Rational(0));
    CHECK(iv.hi == ExtRational(1));
}

TEST_CASE("decide_inclusion agrees with the vertex list") {
    Rng rng(33);
    for (int it = 0; it < 12; ++it) {
        const auto planes = build_planes(random_grades(rng, static_cast<std::size_t>(uniform(rng, 1, 4))));
        for (std::size_t i = 0; i < planes.size(); i += 2) {
            const auto lv = vertices_on_plane(planes[i], planes);
            std::vector<Rational> probes{0};
            for (const auto& x : lv) probes.push_back(x);
            const std::size_t n = probes.size();
            for (std::size_t t = 0; t + 1 < n; ++t) probes.push_back((probes[t] + probes[t + 1]) / Rational(2));
            for (int k = 0; k < 6; ++k) {
                const Rational lo = probes[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(probes.size()) - 1))];
                const bool inf = uniform(rng, 0, 3) == 0;
                const Rational hi = lo + Rational(uniform(rng, 1, 8), 4);
                const LevelInterval iv{lo, inf ? ExtRational::infinity() : ExtRational(hi)};
                bool expect = true;
                if (planes[i].is_horizontal()) {
                    const Rational lvl = planes[i].d / planes[i].n_l;
                    expect = !(lo < lvl && ExtRational(lvl) < iv.hi);
                } else {
                    for (const auto& x : lv)
                        if (lo < x && ExtRational(x) < iv.hi) expect = false;
                }
                CHECK(decide_inclusion(planes[i], iv, planes) == expect);
            }
        }
    }
}

TEST_CASE("matching distance of small examples") {
    const auto a = testing::point_module(0, 0);
    const auto b = testing::point_module(1, 1);
    CHECK(matching_distance(a, b, 1) == ExtRational(1));
    CHECK(matching_distance(a, a, 1) == ExtRational(0));
    CHECK(matching_distance(a, testing::zero_module(), 1).is_infinite());
    CHECK(matching_distance(testing::zero_module(), testing::zero_module(), 1) == ExtRational(0));
    CHECK(matching_distance(testing::fig1(), testing::fig1(), 3) == ExtRational(0));
}

TEST_CASE("distance is symmetric, seed independent and decides tight") {
    Rng rng(44);
    for (int it = 0; it < 6; ++it) {
        const auto q = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 5);
        const auto q2 = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 5);
        const auto d = matching_distance(q, q2, 1);
        CHECK(matching_distance(q, q2, 2) == d);
        CHECK(matching_distance(q2, q, 3) == d);
        if (d.is_infinite()) continue;
        CHECK(decide_leq(q, q2, d.value()));
        if (d.value().sign() > 0) CHECK_FALSE(decide_leq(q, q2, d.value() * Rational(99, 100)));
    }
}

TEST_CASE("random permutation is a permutation") {
    std::mt19937_64 rng(1);
    auto p = random_permutation(20, rng);
    std::sort(p.begin(), p.end());
    for (std::size_t i = 0; i < 20; ++i) CHECK(p[i] == i);
}
