#include <doctest.h>

#include <map>
#include <set>

#include "../support/instances.hpp"
#include "mdist/arrangement.hpp"
#include "mdist/slices.hpp"

using namespace mdist;
using mdist::testing::Rng;
using mdist::testing::uniform;

namespace {

std::vector<Grade> random_grades(Rng& rng, std::size_t n, std::int64_t hi = 6) {
    std::vector<Grade> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back({Rational(uniform(rng, 0, hi)), Rational(uniform(rng, 0, hi))});
    return g;
}

std::vector<int> sign_vector(const Arrangement& arr, const Point2& p) {
    std::vector<int> out;
    for (const auto& l : arr.lines) out.push_back(l.side(p));
    return out;
}

// Sample points between consecutive lines inside every vertical slab of the box.
std::vector<Point2> slab_samples(const Arrangement& arr) {
    std::set<Rational> cuts{arr.eps, Rational(1)};
    for (const auto& l : arr.lines)
        if (l.vertical) cuts.insert(l.at);
    for (std::size_t i = 0; i < arr.lines.size(); ++i)
        for (std::size_t j = i + 1; j < arr.lines.size(); ++j) {
            const auto &l = arr.lines[i], &m = arr.lines[j];
            if (l.vertical || m.vertical || l.slope == m.slope) continue;
            const Rational a = (m.intercept - l.intercept) / (l.slope - m.slope);
            if (arr.eps < a && a < Rational(1)) cuts.insert(a);
        }
    std::vector<Point2> out;
    const std::vector<Rational> c(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        const Rational a = (c[k] + c[k + 1]) / Rational(2);
        std::set<Rational> ys{arr.y_min, arr.y_max};
        for (const auto& l : arr.lines)
            if (!l.vertical) ys.insert(l.slope * a + l.intercept);
        const std::vector<Rational> y(ys.begin(), ys.end());
        for (std::size_t t = 0; t + 1 < y.size(); ++t) out.push_back({a, (y[t] + y[t + 1]) / Rational(2)});
    }
    return out;
}

void check_structure(const Arrangement& arr) {
    // Euler: V - E + F = 2 counting the outer face.
    CHECK(static_cast<std::int64_t>(arr.vertices.size()) - static_cast<std::int64_t>(arr.num_edges()) +
              static_cast<std::int64_t>(arr.faces.size()) + 1 ==
          2);
    for (std::size_t e = 0; e < arr.half_edges.size(); ++e) {
        const auto& he = arr.half_edges[e];
        CHECK(arr.half_edges[he.twin].twin == e);
        CHECK(arr.half_edges[he.next].origin == arr.half_edges[he.twin].origin);
    }
    // Representatives lie strictly inside the box and off every line; distinct faces differ in sign vector.
    std::set<std::vector<int>> seen;
    for (const auto& f : arr.faces) {
        const auto& p = f.representative;
        CHECK(arr.eps < p.a);
        CHECK(p.a < Rational(1));
        CHECK(arr.y_min < p.b);
        CHECK(p.b < arr.y_max);
        const auto sv = sign_vector(arr, p);
        for (const int s : sv) CHECK(s != 0);
        CHECK(seen.insert(sv).second);
    }
    // Every open cell met by slab sampling is one of the faces.
    for (const auto& p : slab_samples(arr)) CHECK(seen.count(sign_vector(arr, p)) == 1);
}

}  // namespace

TEST_CASE("single line splits the box in two") {
    std::vector<LinePrimitive> prims{{Line2::non_vertical(Rational(-1), Rational(2)), Provenance::l_join, 0, 0, 0}};
    const auto arr = build_arrangement(prims);
    CHECK(arr.faces.size() == 2);
    CHECK(arr.lines.size() == 1);
    check_structure(arr);
    const auto walk = euler_walk(arr);
    CHECK(walk.size() == 1);
}

TEST_CASE("two crossing lines give four faces") {
    std::vector<LinePrimitive> prims{{Line2::non_vertical(Rational(-1), Rational(1)), Provenance::l_join, 0, 0, 0},
                                     {Line2::non_vertical(Rational(1), Rational(0)), Provenance::l_join, 1, 1, 0}};
    const auto arr = build_arrangement(prims);
    CHECK(arr.faces.size() == 4);
    check_structure(arr);
}

TEST_CASE("verticals outside the open strip are set aside") {
    std::vector<LinePrimitive> prims{{Line2::vertical_at(Rational(1)), Provenance::s_slope, 0, 1, 1},
                                     {Line2::vertical_at(Rational(3)), Provenance::s_slope, 0, 1, 2},
                                     {Line2::vertical_at(Rational(1, 2)), Provenance::s_slope, 0, 2, 1}};
    const auto arr = build_arrangement(prims);
    CHECK(arr.outside.size() == 2);
    CHECK(arr.faces.size() == 2);
}

TEST_CASE("duplicate primitives share one line") {
    std::vector<Grade> g{{Rational(1), Rational(2)}, {Rational(1), Rational(2)}};
    const auto arr = build_arrangement(build_lines_L(g));
    CHECK(arr.lines.size() == 1);
    CHECK(arr.primitives_of_line[0].size() == 3);
}

TEST_CASE("random arrangements: structure, walk coverage and preorder constancy") {
    Rng rng(11);
    for (int it = 0; it < 40; ++it) {
        const auto grades = random_grades(rng, static_cast<std::size_t>(uniform(rng, 1, 4)));
        const Rational lambda(uniform(rng, 1, 6), 2);
        const auto arr = build_arrangement(build_lines_T_lambda(grades, lambda));
        check_structure(arr);

        const auto walk = euler_walk(arr);
        std::set<std::uint32_t> visited{arr.start_face()};
        std::uint32_t cur = arr.start_face();
        for (const auto& st : walk) {
            CHECK(st.from == cur);
            cur = st.to;
            visited.insert(st.to);
        }
        CHECK(visited.size() == arr.faces.size());
        CHECK(walk.size() <= 2 * (arr.faces.size() - 1));
        for (const auto& st : walk) {
            const auto& line = arr.lines[st.line];
            CHECK(line.side(arr.faces[st.from].representative) == -line.side(arr.faces[st.to].representative));
        }

        // Along every face the preorder of pushes is the same at the representative and at slab samples.
        std::map<std::vector<int>, SlicePreorder> by_face;
        for (const auto& f : arr.faces)
            by_face[sign_vector(arr, f.representative)] =
                slice_preorder(grades, {f.representative.a, f.representative.b});
        for (const auto& p : slab_samples(arr)) {
            const auto it2 = by_face.find(sign_vector(arr, p));
            REQUIRE(it2 != by_face.end());
            CHECK(slice_preorder(grades, {p.a, p.b}).blocks == it2->second.blocks);
        }
    }
}
