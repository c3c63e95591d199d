#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/instances.hpp"
#include "mdist/decision.hpp"
#include "mdist/matching.hpp"
#include "mdist/oracle.hpp"
#include "mdist/persistence.hpp"

using namespace mdist;
using mdist::testing::Rng;
using mdist::testing::uniform;
using oracle::Bar;

namespace {

Bar bar(std::int64_t b, std::int64_t d) { return {Rational(b), ExtRational(Rational(d))}; }
Bar bar_inf(std::int64_t b) { return {Rational(b), ExtRational::infinity()}; }

std::vector<Bar> to_bars(const std::vector<Interval>& iv) {
    std::vector<Bar> out;
    for (const auto& i : iv) out.push_back({i.birth, i.death});
    return out;
}

}  // namespace

TEST_CASE("brute bottleneck examples") {
    const std::vector<Bar> a{bar(0, 10)};
    const std::vector<Bar> none;
    CHECK(oracle::brute_bottleneck(a, a) == ExtRational(0));
    CHECK(oracle::brute_bottleneck(a, none) == ExtRational(5));
    const std::vector<Bar> b{bar(2, 4), bar_inf(2)};
    const std::vector<Bar> c{bar_inf(2)};
    CHECK(oracle::brute_bottleneck(b, c) == ExtRational(1));
    CHECK(oracle::brute_bottleneck(c, none).is_infinite());
    const std::vector<Bar> many(7, bar(0, 1));
    CHECK_THROWS_AS(oracle::brute_bottleneck(many, none), oracle::OracleLimitError);
}

TEST_CASE("Kuhn-based bottleneck equals exhaustive search") {
    Rng rng(3);
    for (int it = 0; it < 300; ++it) {
        const auto x = to_bars(testing::random_barcode(rng, 5));
        const auto y = to_bars(testing::random_barcode(rng, 5));
        CHECK(oracle::naive_bottleneck(x, y) == oracle::brute_bottleneck(x, y));
    }
}

TEST_CASE("textbook reduction agrees with the RU barcode") {
    Rng rng(8);
    for (int it = 0; it < 200; ++it) {
        const auto q = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 10)), 8,
                                                          uniform(rng, 0, 1) ? 2 : 3);
        const DualPoint s{Rational(uniform(rng, 1, 8), 8), Rational(uniform(rng, -16, 16), 2)};
        CHECK(oracle::naive_barcode(q, s) == to_bars(slice_barcode(q, s)));
    }
}

TEST_CASE("rank oracle on the two-generator example") {
    const auto q = testing::fig1();
    const DualPoint diag{Rational(1), Rational(0)};
    CHECK(oracle::rank_oracle(q, diag, Rational(3), Rational(3)) == 2);
    CHECK(oracle::rank_oracle(q, diag, Rational(3), Rational(5)) == 1);
    CHECK(oracle::rank_oracle(q, diag, Rational(1), Rational(1)) == 0);
    CHECK_THROWS(oracle::rank_oracle(q, diag, Rational(2), Rational(1)));
}

TEST_CASE("rank oracle counts covering bars") {
    Rng rng(12);
    for (int it = 0; it < 200; ++it) {
        const auto q = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 10)));
        const DualPoint s{Rational(uniform(rng, 1, 4), 4), Rational(uniform(rng, -8, 8))};
        const Rational t(uniform(rng, 0, 24), 2);
        const Rational t2 = t + Rational(uniform(rng, 0, 8), 2);
        std::size_t count = 0;
        for (const auto& iv : slice_barcode(q, s))
            if (iv.birth <= t && ExtRational(t2) < iv.death) ++count;
        CHECK(oracle::rank_oracle(q, s, t, t2) == count);
    }
}

TEST_CASE("naive decision examples") {
    const auto a = testing::point_module(0, 0);
    const auto b = testing::point_module(1, 1);
    CHECK(oracle::naive_decide_leq(a, b, Rational(1)));
    CHECK_FALSE(oracle::naive_decide_leq(a, b, Rational(99, 100)));
    CHECK(oracle::naive_decide_leq(testing::fig1(), testing::fig1(), Rational(0)));
}

TEST_CASE("naive decision agrees with the walk") {
    Rng rng(14);
    for (int it = 0; it < 25; ++it) {
        const auto q = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 6);
        const auto q2 = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 6);
        const Rational lambda(uniform(rng, 0, 12), 4);
        CHECK(oracle::naive_decide_leq(q, q2, lambda) == decide_leq(q, q2, lambda));
    }
}

TEST_CASE("full-candidate distance examples and guard") {
    const auto a = testing::point_module(0, 0);
    const auto b = testing::point_module(1, 1);
    CHECK(oracle::naive_matching_distance(a, b) == ExtRational(1));
    CHECK(oracle::naive_matching_distance(testing::fig1(), testing::fig1()) == ExtRational(0));
    CHECK(oracle::naive_matching_distance(a, testing::zero_module()).is_infinite());
    Rng rng(1);
    const auto big = testing::random_presentation(rng, 7, 6);
    CHECK_THROWS_AS(oracle::naive_matching_distance(big, a), oracle::OracleLimitError);
    CHECK_NOTHROW(oracle::naive_matching_distance(big, a, 13));
}

TEST_CASE("threaded and serial triple enumeration agree") {
    Rng rng(2);
    for (int it = 0; it < 5; ++it) {
        std::vector<Grade> g;
        for (int k = 0; k < 8; ++k) g.push_back({Rational(uniform(rng, 0, 8)), Rational(uniform(rng, 0, 8), 2)});
        CHECK(oracle::naive_vertex_levels(g) == oracle::naive_vertex_levels_serial(g));
    }
}

TEST_CASE("sampled lower bound") {
    const auto f = testing::fig1();
    CHECK(oracle::sampled_lower_bound(f, f, {5, 5, {}, {}}).value == ExtRational(0));
    Rng rng(6);
    for (int it = 0; it < 8; ++it) {
        const auto q = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 6);
        const auto q2 = testing::random_presentation_total(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 6);
        const auto coarse = oracle::sampled_lower_bound(q, q2, {5, 5, {}, {}});
        const auto fine = oracle::sampled_lower_bound(q, q2, {10, 9, {}, {}});
        CHECK(coarse.samples.size() == 50);
        CHECK(coarse.value <= fine.value);
        CHECK(fine.value <= oracle::naive_matching_distance(q, q2));
    }
}
