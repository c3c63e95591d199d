#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/instances.hpp"
#include "mdist/decision.hpp"
#include "mdist/persistence.hpp"

using namespace mdist;
using mdist::testing::Rng;
using mdist::testing::uniform;

TEST_CASE("point modules at distance one") {
    const auto q = testing::point_module(0, 0);
    const auto q2 = testing::point_module(1, 1);
    CHECK(decide_leq(q, q2, Rational(1)));
    CHECK_FALSE(decide_leq(q, q2, Rational(99, 100)));
    CHECK(decide_leq(q, q, Rational(0)));
}

TEST_CASE("zero modules are always close") {
    CHECK(decide_leq(testing::zero_module(), testing::zero_module(), Rational(0)));
    CHECK_THROWS_AS(decide_leq_oneside(testing::zero_module(), testing::zero_module(), Rational(-1)),
                    std::invalid_argument);
}

TEST_CASE("tracked barcodes agree with fresh reductions at every face") {
    Rng rng(5);
    for (int it = 0; it < 30; ++it) {
        const auto q = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 6);
        const auto q2 = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 6);
        const Rational lambda(uniform(rng, 0, 8), 2);
        std::size_t visits = 0;
        DecisionStats stats;
        const bool ok = decide_leq_oneside(
            q, q2, lambda,
            [&](const FaceVisit& v) {
                ++visits;
                const auto fresh1 = bars_from_intervals(slice_barcode(q, v.slice));
                const auto fresh2 = bars_from_intervals(slice_barcode(q2, v.slice));
                auto sorted = [](std::vector<BarPoint> b) {
                    std::sort(b.begin(), b.end(), [](const BarPoint& x, const BarPoint& y) {
                        return std::tie(x.birth, x.death) < std::tie(y.birth, y.death);
                    });
                    std::vector<BarPoint> out;
                    for (auto& p : b)
                        if (ExtRational(p.birth) != p.death) out.push_back(p);
                    return out;
                };
                CHECK(sorted(v.first) == sorted(fresh1));
                CHECK(sorted(v.second) == sorted(fresh2));
                const bool close = bottleneck_distance(fresh1, fresh2) <= ExtRational(lambda);
                CHECK(v.perfect == close);
            },
            &stats);
        if (ok) CHECK(visits == stats.crossings + 1);
    }
}

TEST_CASE("decision is monotone in lambda") {
    Rng rng(9);
    for (int it = 0; it < 15; ++it) {
        const auto q = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 6);
        const auto q2 = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 6);
        bool prev = false;
        for (int k = 0; k <= 14; ++k) {
            const bool now = decide_leq(q, q2, Rational(k, 2));
            if (prev) CHECK(now);
            prev = now;
        }
    }
}
