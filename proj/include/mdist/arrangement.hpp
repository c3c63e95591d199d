#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mdist/presentation.hpp"
#include "mdist/rational.hpp"

namespace mdist {

struct Point2 {
    Rational a;
    Rational b;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend auto operator<=>(const Point2& p, const Point2& q) {
        if (const auto c = p.a <=> q.a; c != 0) return c;
        return p.b <=> q.b;
    }
};

/// A line in the dual plane: b = slope * a + intercept, or the vertical a = at.
struct Line2 {
    bool vertical = false;
    Rational slope;
    Rational intercept;
    Rational at;

    static Line2 non_vertical(Rational slope, Rational intercept) {
        return {false, std::move(slope), std::move(intercept), Rational(0)};
    }
    static Line2 vertical_at(Rational a) { return {true, Rational(0), Rational(0), std::move(a)}; }
    /// Sign of p relative to the line: +1 above (or right of a vertical line).
    [[nodiscard]] int side(const Point2& p) const;

    friend bool operator==(const Line2&, const Line2&) = default;
    friend auto operator<=>(const Line2& l, const Line2& m) {
        if (l.vertical != m.vertical) return l.vertical ? std::strong_ordering::greater : std::strong_ordering::less;
        if (l.vertical) return l.at <=> m.at;
        if (const auto c = l.slope <=> m.slope; c != 0) return c;
        return l.intercept <=> m.intercept;
    }
};

enum class Provenance : std::uint8_t { l_join, p_shift, s_slope };

/// A line with the pair of elements (indices into the grade list) and the
/// shift multiple that produced it.
struct LinePrimitive {
    Line2 line;
    Provenance kind = Provenance::l_join;
    std::uint32_t h = 0;
    std::uint32_t h2 = 0;
    int shift = 0;

    friend bool operator==(const LinePrimitive&, const LinePrimitive&) = default;
};

/// Duals of all pairwise joins (including h = h').
std::vector<LinePrimitive> build_lines_L(std::span<const Grade> grades);

/// The L lines plus the shifted lines (h_x, h'_y + i lambda)* for
/// i in {-2,-1,1,2} and the verticals a = i lambda / |h_x - h'_x| for i in {1,2}.
std::vector<LinePrimitive> build_lines_T_lambda(std::span<const Grade> grades, const Rational& lambda);

/// DCEL of the distinct lines clipped to the box [eps, 1] x [y_min, y_max].
struct Arrangement {
    static constexpr std::uint32_t none = static_cast<std::uint32_t>(-1);

    struct HalfEdge {
        std::uint32_t origin;
        std::uint32_t twin;
        std::uint32_t next;
        std::uint32_t face;  // `none` for the outer face
        std::uint32_t line;  // distinct line index, `none` on the box boundary
    };
    struct Face {
        std::uint32_t edge;
        Point2 representative;
    };
    struct DualEdge {
        std::uint32_t f;
        std::uint32_t g;
        std::uint32_t line;
    };

    std::vector<LinePrimitive> primitives;
    /// Distinct lines crossing the box interior, sorted.
    std::vector<Line2> lines;
    /// Distinct line -> primitives on it (sorted by provenance).
    std::vector<std::vector<std::uint32_t>> primitives_of_line;
    /// Primitives whose line misses the open box (vertical lines outside 0 < a < 1).
    std::vector<std::uint32_t> outside;

    Rational eps;
    Rational y_min;
    Rational y_max;

    std::vector<Point2> vertices;
    std::vector<HalfEdge> half_edges;
    std::vector<Face> faces;
    std::vector<DualEdge> dual_edges;

    [[nodiscard]] std::size_t num_edges() const { return half_edges.size() / 2; }
    /// Face whose representative is lexicographically smallest.
    [[nodiscard]] std::uint32_t start_face() const;
    /// Line-oriented text: lines, faces with representatives. Not a stable format.
    [[nodiscard]] std::string dump() const;
};

Arrangement build_arrangement(std::vector<LinePrimitive> primitives);

struct WalkStep {
    std::uint32_t from;
    std::uint32_t to;
    std::uint32_t line;
};

/// Depth-first tour of a spanning tree of the dual graph starting at `start`;
/// each tree edge is crossed at most twice, trailing returns are dropped.
std::vector<WalkStep> euler_walk(const Arrangement& arr, std::uint32_t start);
inline std::vector<WalkStep> euler_walk(const Arrangement& arr) { return euler_walk(arr, arr.start_face()); }

}  // namespace mdist
