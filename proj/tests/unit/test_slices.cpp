#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/instances.hpp"
#include "mdist/slices.hpp"

using namespace mdist;
using mdist::testing::fig1;
using mdist::testing::Rng;
using mdist::testing::uniform;

namespace {

Rational rand_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t den = 4) {
    return Rational(uniform(rng, lo * den, hi * den), den);
}

DualPoint rand_slice(Rng& rng) {
    return DualPoint::checked(Rational(uniform(rng, 1, 8), 8), rand_rational(rng, -8, 8));
}

}  // namespace

TEST_CASE("push examples") {
    const DualPoint s{1, -1};
    CHECK(push(s, {3, 2}) == Rational(2));
    CHECK(push(s, {4, Rational(3, 2)}) == Rational(3));
    CHECK(push(s, {5, 4}) == Rational(4));
}

TEST_CASE("dual point validation") {
    CHECK_THROWS_AS(DualPoint::checked(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(DualPoint::checked(Rational(3, 2), 1), std::invalid_argument);
    CHECK_NOTHROW(DualPoint::checked(1, -5));
}

TEST_CASE("dual of point") {
    CHECK(dual_of_point({3, 2}) == DualLine{-3, 2});
    CHECK(dual_of_point({0, 0}) == DualLine{0, 0});
}

TEST_CASE("duality on random pairs") {
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const Grade p{rand_rational(rng, -5, 5, 2), rand_rational(rng, -5, 5, 2)};
        const auto s = rand_slice(rng);
        const auto line = dual_of_point(p);
        // p above s exactly when the line p* passes above the point s*.
        CHECK(side_of_slice(s, p) == -side_of_line(line, s));
        CHECK((side_of_slice(s, p) == 0) == (line.at(s.a) == s.b));
    }
}

TEST_CASE("push is monotone and 1-Lipschitz") {
    Rng rng(9);
    for (int i = 0; i < 300; ++i) {
        const auto s = rand_slice(rng);
        const Grade p{rand_rational(rng, 0, 8), rand_rational(rng, 0, 8)};
        const Grade q{rand_rational(rng, 0, 8), rand_rational(rng, 0, 8)};
        if (leq(p, q)) CHECK(push(s, p) <= push(s, q));
        const auto bound = max((p.x - q.x).abs(), (p.y - q.y).abs());
        CHECK((push(s, p) - push(s, q)).abs() <= bound);
        const auto v = push(s, p);
        CHECK(v >= p.y);
        CHECK(v >= s.a * p.x + s.b);
    }
}

TEST_CASE("slice preorder on fig1") {
    const auto q = fig1();
    std::vector<Grade> all = q.generators;
    all.push_back(q.relations[0]);
    const auto diag = slice_preorder(all, {1, 0});
    REQUIRE(diag.blocks.size() == 2);
    CHECK(diag.blocks[0] == std::vector<std::size_t>{0, 1});
    CHECK(diag.blocks[1] == std::vector<std::size_t>{2});
    const auto low = slice_preorder(all, {1, -2});
    REQUIRE(low.blocks.size() == 3);
    CHECK(low.blocks[0] == std::vector<std::size_t>{1});
    CHECK(low.blocks[1] == std::vector<std::size_t>{0});
    CHECK(low.blocks[2] == std::vector<std::size_t>{2});
    CHECK(slice_preorder(std::vector<Grade>{{1, 1}}, {1, 0}).blocks.size() == 1);
}

TEST_CASE("induced ordered presentation") {
    const auto q = fig1();
    const auto o = induced_ordered_presentation(q, {1, -2});
    CHECK(o.row_order == std::vector<std::uint32_t>{1, 0});
    CHECK(o.col_order == std::vector<std::uint32_t>{0});
    CHECK(o.row_push == std::vector<Rational>{0, 2});
    CHECK(o.col_push == std::vector<Rational>{4});
    CHECK(is_ordered(q, {1, -2}, o));

    const auto diag = induced_ordered_presentation(q, {1, 0});
    CHECK(diag.row_order == std::vector<std::uint32_t>{0, 1});
    const std::vector<std::uint32_t> rank{5, 1, 0};
    CHECK(induced_ordered_presentation(q, {1, 0}, rank).row_order == std::vector<std::uint32_t>{1, 0});

    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        const auto r = mdist::testing::random_presentation(rng, 5, 4);
        const auto s = rand_slice(rng);
        CHECK(is_ordered(r, s, induced_ordered_presentation(r, s)));
    }
}
