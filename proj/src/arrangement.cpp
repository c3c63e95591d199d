#include "mdist/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "mdist/slices.hpp"

namespace mdist {

int Line2::side(const Point2& p) const {
    const auto c = vertical ? p.a <=> at : p.b <=> slope * p.a + intercept;
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

namespace {

Line2 dual_line(const Grade& p) {
    const auto d = dual_of_point(p);
    return Line2::non_vertical(d.slope, d.intercept);
}

}  // namespace

std::vector<LinePrimitive> build_lines_L(std::span<const Grade> grades) {
    std::vector<LinePrimitive> out;
    for (std::uint32_t i = 0; i < grades.size(); ++i)
        for (std::uint32_t j = i; j < grades.size(); ++j)
            out.push_back({dual_line(join(grades[i], grades[j])), Provenance::l_join, i, j, 0});
    return out;
}

std::vector<LinePrimitive> build_lines_T_lambda(std::span<const Grade> grades, const Rational& lambda) {
    if (lambda.sign() < 0) throw std::invalid_argument("build_lines_T_lambda: negative lambda");
    auto out = build_lines_L(grades);
    for (std::uint32_t i = 0; i < grades.size(); ++i)
        for (std::uint32_t j = 0; j < grades.size(); ++j) {
            if (i == j) continue;
            for (const int k : {-2, -1, 1, 2}) {
                const Grade shifted{grades[i].x, grades[j].y + Rational(k) * lambda};
                out.push_back({dual_line(shifted), Provenance::p_shift, i, j, k});
            }
        }
    for (std::uint32_t i = 0; i < grades.size(); ++i)
        for (std::uint32_t j = i + 1; j < grades.size(); ++j) {
            const Rational dx = (grades[i].x - grades[j].x).abs();
            if (dx.is_zero()) continue;
            for (const int k : {1, 2})
                out.push_back({Line2::vertical_at(Rational(k) * lambda / dx), Provenance::s_slope, i, j, k});
        }
    return out;
}

namespace {

struct PointHash {
    std::size_t operator()(const Point2& p) const noexcept { return p.a.hash() * 1000003U ^ p.b.hash(); }
};

struct LineHash {
    std::size_t operator()(const Line2& l) const noexcept {
        return l.vertical ? l.at.hash() * 31U + 7U : (l.slope.hash() * 1000003U ^ l.intercept.hash());
    }
};

// Counterclockwise rank of a direction along `geom`, starting just past
// straight down: rightward by slope, up, leftward by slope, down.
struct Heading {
    int quadrant;
    const Rational* slope;

    friend bool operator<(const Heading& x, const Heading& y) {
        if (x.quadrant != y.quadrant) return x.quadrant < y.quadrant;
        return x.slope && *x.slope < *y.slope;
    }
};

struct Segment {
    Line2 geom;
    std::uint32_t line;  // Arrangement::none for box sides
    std::vector<std::pair<Rational, std::uint32_t>> points;  // (parameter, vertex)
};

}  // namespace

Arrangement build_arrangement(std::vector<LinePrimitive> primitives) {
    Arrangement arr;
    arr.primitives = std::move(primitives);

    // Distinct geometry and multiplicity map.
    std::unordered_map<Line2, std::vector<std::uint32_t>, LineHash> groups;
    for (std::uint32_t k = 0; k < arr.primitives.size(); ++k) {
        const auto& l = arr.primitives[k].line;
        if (l.vertical && (l.at.sign() <= 0 || l.at >= Rational(1))) {
            arr.outside.push_back(k);
            continue;
        }
        groups[l].push_back(k);
    }
    for (const auto& [line, members] : groups) arr.lines.push_back(line);
    std::sort(arr.lines.begin(), arr.lines.end());
    for (const auto& line : arr.lines) {
        auto members = groups[line];
        std::sort(members.begin(), members.end(), [&](std::uint32_t x, std::uint32_t y) {
            const auto& p = arr.primitives[x];
            const auto& q = arr.primitives[y];
            return std::tie(p.kind, p.h, p.h2, p.shift, x) < std::tie(q.kind, q.h, q.h2, q.shift, y);
        });
        arr.primitives_of_line.push_back(std::move(members));
    }

    // Box: left edge strictly left of every intersection with a in (0, 1].
    const Rational one(1);
    std::optional<Rational> min_a;
    auto consider = [&](const Rational& a) {
        if (a.sign() > 0 && a <= one && (!min_a || a < *min_a)) min_a = a;
    };
    struct Crossing {
        std::uint32_t i, j;
        Rational a;
    };
    std::vector<Crossing> crossings;
    for (std::uint32_t i = 0; i < arr.lines.size(); ++i) {
        const auto& l = arr.lines[i];
        if (l.vertical) {
            consider(l.at);
            continue;
        }
        for (std::uint32_t j = i + 1; j < arr.lines.size(); ++j) {
            const auto& m = arr.lines[j];
            if (m.vertical || m.slope == l.slope) continue;
            Rational a = (m.intercept - l.intercept) / (l.slope - m.slope);
            if (a.sign() <= 0 || a > one) continue;
            consider(a);
            crossings.push_back({i, j, std::move(a)});
        }
    }
    arr.eps = min_a ? *min_a / Rational(2) : Rational(1, 2);
    std::optional<Rational> lo, hi;
    for (const auto& l : arr.lines) {
        if (l.vertical) continue;
        for (const Rational* a : {static_cast<const Rational*>(&arr.eps), &one}) {
            const Rational v = l.slope * *a + l.intercept;
            if (!lo || v < *lo) lo = v;
            if (!hi || v > *hi) hi = v;
        }
    }
    arr.y_min = (lo ? *lo : Rational(0)) - one;
    arr.y_max = (hi ? *hi : Rational(0)) + one;

    std::vector<Segment> segs;
    for (std::uint32_t i = 0; i < arr.lines.size(); ++i) segs.push_back({arr.lines[i], i, {}});
    segs.push_back({Line2::vertical_at(arr.eps), Arrangement::none, {}});
    segs.push_back({Line2::vertical_at(one), Arrangement::none, {}});
    segs.push_back({Line2::non_vertical(0, arr.y_min), Arrangement::none, {}});
    segs.push_back({Line2::non_vertical(0, arr.y_max), Arrangement::none, {}});

    std::unordered_map<Point2, std::uint32_t, PointHash> index;
    auto vertex = [&](Point2 p) {
        const auto [it, fresh] = index.try_emplace(p, static_cast<std::uint32_t>(arr.vertices.size()));
        if (fresh) arr.vertices.push_back(std::move(p));
        return it->second;
    };
    auto add_point = [&](Segment& s, const Point2& p) {
        const auto v = vertex(p);
        s.points.emplace_back(s.geom.vertical ? p.b : p.a, v);
    };
    for (const auto& c : crossings) {
        const auto& l = arr.lines[c.i];
        Point2 p{c.a, l.slope * c.a + l.intercept};
        if (p.b < arr.y_min || p.b > arr.y_max) continue;
        add_point(segs[c.i], p);
        add_point(segs[c.j], p);
    }
    // Vertical lines and box sides against everything else.
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const auto& l = segs[i].geom;
            const auto& m = segs[j].geom;
            const bool box_pair = segs[i].line == Arrangement::none || segs[j].line == Arrangement::none;
            if (l.vertical == m.vertical) {
                if (l.vertical || !box_pair || l.slope == m.slope) continue;
                // A non-vertical line against the top or bottom side.
                const auto& side = segs[i].line == Arrangement::none ? l : m;
                const auto& n = segs[i].line == Arrangement::none ? m : l;
                const Rational a = (side.intercept - n.intercept) / n.slope;
                if (a < arr.eps || a > one) continue;
                const Point2 p{a, side.intercept};
                add_point(segs[i], p);
                add_point(segs[j], p);
                continue;
            }
            const auto& v = l.vertical ? l : m;
            const auto& n = l.vertical ? m : l;
            const Point2 p{v.at, n.slope * v.at + n.intercept};
            if (p.b < arr.y_min || p.b > arr.y_max) continue;
            add_point(segs[i], p);
            add_point(segs[j], p);
        }

    std::vector<Heading> heading;
    for (auto& s : segs) {
        std::sort(s.points.begin(), s.points.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        s.points.erase(std::unique(s.points.begin(), s.points.end(),
                                   [](const auto& x, const auto& y) { return x.second == y.second; }),
                       s.points.end());
        for (std::size_t k = 0; k + 1 < s.points.size(); ++k) {
            const auto e = static_cast<std::uint32_t>(arr.half_edges.size());
            arr.half_edges.push_back({s.points[k].second, e + 1, Arrangement::none, Arrangement::none, s.line});
            arr.half_edges.push_back({s.points[k + 1].second, e, Arrangement::none, Arrangement::none, s.line});
            const Rational* slope = s.geom.vertical ? nullptr : &s.geom.slope;
            heading.push_back({s.geom.vertical ? 1 : 0, slope});
            heading.push_back({s.geom.vertical ? 3 : 2, slope});
        }
    }

    // Angular order of outgoing half-edges; next(e) is the clockwise
    // neighbor of twin(e) around the head of e.
    std::vector<std::vector<std::uint32_t>> out(arr.vertices.size());
    for (std::uint32_t e = 0; e < arr.half_edges.size(); ++e) out[arr.half_edges[e].origin].push_back(e);
    std::vector<std::uint32_t> slot(arr.half_edges.size());
    for (std::uint32_t v = 0; v < out.size(); ++v) {
        auto& list = out[v];
        std::vector<std::size_t> order(list.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return heading[list[x]] < heading[list[y]]; });
        std::vector<std::uint32_t> sorted;
        for (const auto k : order) sorted.push_back(list[k]);
        list = std::move(sorted);
        for (std::uint32_t k = 0; k < list.size(); ++k) slot[list[k]] = k;
    }
    for (auto& e : arr.half_edges) {
        const auto t = e.twin;
        const auto& head = out[arr.half_edges[t].origin];
        const auto k = slot[t];
        e.next = head[(k + head.size() - 1) % head.size()];
    }

    // Faces: counterclockwise cycles with positive area; the outer boundary is the clockwise one.
    std::vector<bool> seen(arr.half_edges.size(), false);
    for (std::uint32_t e0 = 0; e0 < arr.half_edges.size(); ++e0) {
        if (seen[e0]) continue;
        std::vector<std::uint32_t> cycle;
        for (auto e = e0; !seen[e]; e = arr.half_edges[e].next) {
            seen[e] = true;
            cycle.push_back(e);
        }
        // Faces are convex: the first strict corner gives the orientation
        // and a triangle whose centroid is interior.
        const std::size_t len = cycle.size();
        auto at = [&](std::size_t k) -> const Point2& { return arr.vertices[arr.half_edges[cycle[k % len]].origin]; };
        int turn = 0;
        std::size_t corner = 0;
        for (std::size_t k = 0; k < len && turn == 0; ++k) {
            const auto &p = at(k), &q = at(k + 1), &r = at(k + 2);
            turn = ((q.a - p.a) * (r.b - q.b) - (q.b - p.b) * (r.a - q.a)).sign();
            corner = k;
        }
        if (turn <= 0) continue;
        const auto &p0 = at(corner), &p1 = at(corner + 1), &p2 = at(corner + 2);
        const auto f = static_cast<std::uint32_t>(arr.faces.size());
        const Rational third(1, 3);
        arr.faces.push_back({e0, {(p0.a + p1.a + p2.a) * third, (p0.b + p1.b + p2.b) * third}});
        for (const auto e : cycle) arr.half_edges[e].face = f;
    }

    for (std::uint32_t e = 0; e < arr.half_edges.size(); e += 2) {
        const auto& h = arr.half_edges[e];
        const auto& t = arr.half_edges[h.twin];
        if (h.line == Arrangement::none || h.face == Arrangement::none || t.face == Arrangement::none) continue;
        arr.dual_edges.push_back({h.face, t.face, h.line});
    }
    return arr;
}

std::uint32_t Arrangement::start_face() const {
    std::uint32_t best = 0;
    for (std::uint32_t f = 1; f < faces.size(); ++f)
        if (faces[f].representative < faces[best].representative) best = f;
    return best;
}

std::string Arrangement::dump() const {
    std::ostringstream out;
    out << "box " << eps << ' ' << y_min << ' ' << y_max << '\n';
    out << "lines " << lines.size() << '\n';
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.vertical)
            out << "a = " << l.at;
        else
            out << "b = " << l.slope << " a + " << l.intercept;
        out << "  x" << primitives_of_line[i].size() << '\n';
    }
    out << "vertices " << vertices.size() << "\nedges " << num_edges() << '\n';
    out << "faces " << faces.size() << '\n';
    for (std::size_t f = 0; f < faces.size(); ++f)
        out << f << ' ' << faces[f].representative.a << ' ' << faces[f].representative.b << '\n';
    return out.str();
}

std::vector<WalkStep> euler_walk(const Arrangement& arr, std::uint32_t start) {
    std::vector<WalkStep> walk;
    if (arr.faces.empty()) return walk;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(arr.faces.size());
    for (const auto& d : arr.dual_edges) {
        adj[d.f].emplace_back(d.g, d.line);
        adj[d.g].emplace_back(d.f, d.line);
    }
    std::vector<bool> visited(arr.faces.size(), false);
    struct Frame {
        std::uint32_t face;
        std::size_t next;
        std::uint32_t parent;
        std::uint32_t line;
    };
    std::vector<Frame> stack{{start, 0, Arrangement::none, Arrangement::none}};
    visited[start] = true;
    std::size_t keep = 0;
    while (!stack.empty()) {
        auto& top = stack.back();
        if (top.next < adj[top.face].size()) {
            const auto [g, line] = adj[top.face][top.next++];
            if (visited[g]) continue;
            visited[g] = true;
            walk.push_back({top.face, g, line});
            keep = walk.size();
            stack.push_back({g, 0, top.face, line});
        } else {
            if (top.parent != Arrangement::none) walk.push_back({top.face, top.parent, top.line});
            stack.pop_back();
        }
    }
    walk.resize(keep);
    return walk;
}

}  // namespace mdist
