#include "mdist/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <unordered_set>

#include "mdist/arrangement.hpp"
#include "mdist/field.hpp"

namespace mdist::oracle {

namespace {

ExtRational death_gap(const ExtRational& d, const ExtRational& d2) {
    if (d.is_infinite() || d2.is_infinite())
        return d.is_infinite() && d2.is_infinite() ? ExtRational(0) : ExtRational::infinity();
    return (d.value() - d2.value()).abs();
}

ExtRational pair_cost(const Bar& x, const Bar& y) {
    const ExtRational db = (x.birth - y.birth).abs();
    const ExtRational dd = death_gap(x.death, y.death);
    return db < dd ? dd : db;
}

ExtRational delete_cost(const Bar& x) {
    if (x.death.is_infinite()) return ExtRational::infinity();
    return (x.death.value() - x.birth) / Rational(2);
}

std::size_t count_infinite(std::span<const Bar> bars) {
    return static_cast<std::size_t>(std::count_if(bars.begin(), bars.end(), [](const Bar& b) {
        return b.death.is_infinite();
    }));
}

// Kuhn's augmenting paths on the graph with explicit diagonal slots.
bool matchable(std::span<const Bar> first, std::span<const Bar> second, const Rational& lambda) {
    const std::size_t n1 = first.size(), n2 = second.size(), n = n1 + n2;
    const ExtRational lam(lambda);
    auto adjacent = [&](std::size_t u, std::size_t v) {
        if (u < n1 && v < n2) return pair_cost(first[u], second[v]) <= lam;
        if (u < n1) return v - n2 == u && delete_cost(first[u]) <= lam;
        if (v < n2) return u - n1 == v && delete_cost(second[v]) <= lam;
        return true;
    };
    std::vector<std::size_t> mate(n, n);
    std::vector<char> used;
    std::function<bool(std::size_t)> try_kuhn = [&](std::size_t u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || !adjacent(u, v)) continue;
            used[v] = 1;
            if (mate[v] == n || try_kuhn(mate[v])) {
                mate[v] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        used.assign(n, 0);
        if (!try_kuhn(u)) return false;
    }
    return true;
}

std::vector<Grade> all_grades(const Presentation& q, const Presentation& q2) {
    std::vector<Grade> g;
    for (const auto* p : {&q, &q2}) {
        g.insert(g.end(), p->generators.begin(), p->generators.end());
        g.insert(g.end(), p->relations.begin(), p->relations.end());
    }
    return g;
}

// Rank over F_p of dense vectors, by elimination.
std::size_t rank_of(std::vector<std::vector<std::uint32_t>> vecs, const PrimeField& f) {
    std::size_t rank = 0;
    const std::size_t dim = vecs.empty() ? 0 : vecs[0].size();
    for (std::size_t c = 0; c < dim && rank < vecs.size(); ++c) {
        std::size_t piv = rank;
        while (piv < vecs.size() && vecs[piv][c] == 0) ++piv;
        if (piv == vecs.size()) continue;
        std::swap(vecs[piv], vecs[rank]);
        const auto inv = f.inv(vecs[rank][c]);
        for (std::size_t r = rank + 1; r < vecs.size(); ++r) {
            if (vecs[r][c] == 0) continue;
            const auto factor = f.mul(vecs[r][c], inv);
            for (std::size_t k = c; k < dim; ++k) vecs[r][k] = f.sub(vecs[r][k], f.mul(factor, vecs[rank][k]));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::uint32_t> dense_column(const Presentation& q, std::size_t j) {
    std::vector<std::uint32_t> v(q.num_generators(), 0);
    for (const auto& e : q.columns[j]) v[e.row] = e.coeff;
    return v;
}

std::size_t infinite_bars(const Presentation& q) {
    std::vector<std::vector<std::uint32_t>> cols;
    for (std::size_t j = 0; j < q.num_relations(); ++j) cols.push_back(dense_column(q, j));
    return q.num_generators() - rank_of(std::move(cols), PrimeField(q.prime));
}

Rational slice_value(const DualPoint& s, const Grade& p) {
    const Rational on = s.a * p.x + s.b;
    return on < p.y ? p.y : on;
}

std::vector<Line2> t_lambda_lines(const std::vector<Grade>& g, const Rational& lambda) {
    std::vector<Line2> out;
    auto dual = [](const Rational& x, const Rational& y) { return Line2::non_vertical(-x, y); };
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j) out.push_back(dual(max(g[i].x, g[j].x), max(g[i].y, g[j].y)));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (i != j)
                for (const int k : {-2, -1, 1, 2}) out.push_back(dual(g[i].x, g[j].y + Rational(k) * lambda));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const Rational dx = (g[i].x - g[j].x).abs();
            if (dx.is_zero()) continue;
            for (const int k : {1, 2}) out.push_back(Line2::vertical_at(Rational(k) * lambda / dx));
        }
    return out;
}

using PlaneRow = std::array<Rational, 4>;  // n_a, n_b, n_l, d

std::vector<PlaneRow> candidate_planes(std::span<const Grade> g) {
    std::set<PlaneRow> seen;
    std::vector<PlaneRow> out;
    auto add = [&](PlaneRow p) {
        const Rational lead = !p[0].is_zero() ? p[0] : (!p[1].is_zero() ? p[1] : p[2]);
        for (auto& c : p) c = c / lead;
        if (seen.insert(p).second) out.push_back(p);
    };
    for (const auto& h : g)
        for (const auto& h2 : g)
            for (int k = -2; k <= 2; ++k) add({h.x, Rational(1), Rational(-k), h2.y});
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const Rational dx = (g[i].x - g[j].x).abs();
            if (!dx.is_zero())
                for (const int k : {1, 2}) add({dx, Rational(0), Rational(-k), Rational(0)});
        }
    add({Rational(1), Rational(0), Rational(0), Rational(0)});
    add({Rational(1), Rational(0), Rational(0), Rational(1)});
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j) {
            const Rational dy = (g[i].y - g[j].y).abs();
            add({Rational(0), Rational(0), Rational(1), dy});
            add({Rational(0), Rational(0), Rational(1), dy / Rational(2)});
        }
    return out;
}

using i128 = __int128;
constexpr std::int64_t kSmallCoeff = std::int64_t{1} << 30;

// Planes scaled to integer rows when every coefficient is small.
std::optional<std::vector<std::array<std::int64_t, 4>>> integer_rows(const std::vector<PlaneRow>& planes) {
    std::vector<std::array<std::int64_t, 4>> out;
    for (const auto& p : planes) {
        mpz_class l = 1;
        for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
        std::array<std::int64_t, 4> row{};
        for (std::size_t k = 0; k < 4; ++k) {
            const mpz_class v = p[k].numerator() * (l / p[k].denominator());
            if (abs(v) >= kSmallCoeff) return std::nullopt;
            row[k] = v.get_si();
        }
        out.push_back(row);
    }
    return out;
}

mpz_class big(i128 v) {
    const bool neg = v < 0;
    const auto m = static_cast<unsigned __int128>(neg ? -v : v);
    mpz_class out(static_cast<unsigned long>(m >> 64));
    out <<= 64;
    out += mpz_class(static_cast<unsigned long>(m & ~std::uint64_t{0}));
    return neg ? mpz_class(-out) : out;
}

void levels_with_first(const std::vector<std::array<std::int64_t, 4>>& rows, std::size_t i,
                       std::unordered_set<Rational>& acc) {
    const auto& r = rows[i];
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
        const auto& s = rows[j];
        for (std::size_t k = j + 1; k < rows.size(); ++k) {
            const auto& t = rows[k];
            const i128 m_ab = i128{s[0]} * t[1] - i128{s[1]} * t[0];
            const i128 m_al = i128{s[0]} * t[2] - i128{s[2]} * t[0];
            const i128 m_bl = i128{s[1]} * t[2] - i128{s[2]} * t[1];
            const i128 det = r[0] * m_bl - r[1] * m_al + r[2] * m_ab;
            if (det == 0) continue;
            const i128 m_ad = i128{s[0]} * t[3] - i128{s[3]} * t[0];
            const i128 m_bd = i128{s[1]} * t[3] - i128{s[3]} * t[1];
            i128 num = r[0] * m_bd - r[1] * m_ad + r[3] * m_ab;
            i128 den = det;
            if (den < 0) {
                num = -num;
                den = -den;
            }
            if (num <= 0) continue;
            const auto lim = static_cast<i128>(std::numeric_limits<std::int64_t>::max());
            if (num <= lim && den <= lim)
                acc.insert(Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)));
            else
                acc.insert(Rational(mpq_class(big(num), big(den))));
        }
    }
}

void levels_with_first_exact(const std::vector<PlaneRow>& rows, std::size_t i, std::unordered_set<Rational>& acc) {
    const auto& r = rows[i];
    for (std::size_t j = i + 1; j < rows.size(); ++j)
        for (std::size_t k = j + 1; k < rows.size(); ++k) {
            const auto &s = rows[j], &t = rows[k];
            const Rational m_ab = s[0] * t[1] - s[1] * t[0];
            const Rational m_al = s[0] * t[2] - s[2] * t[0];
            const Rational m_bl = s[1] * t[2] - s[2] * t[1];
            const Rational det = r[0] * m_bl - r[1] * m_al + r[2] * m_ab;
            if (det.is_zero()) continue;
            const Rational num = r[0] * (s[1] * t[3] - s[3] * t[1]) - r[1] * (s[0] * t[3] - s[3] * t[0]) + r[3] * m_ab;
            const Rational level = num / det;
            if (level.sign() > 0) acc.insert(level);
        }
}

std::vector<Rational> vertex_levels(std::span<const Grade> grades, bool parallel) {
    const auto planes = candidate_planes(grades);
    const auto rows = integer_rows(planes);
    const auto n = static_cast<std::int64_t>(planes.size());
    std::unordered_set<Rational> all;
#pragma omp parallel if (parallel)
    {
        std::unordered_set<Rational> local;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < n; ++i) {
            if (rows)
                levels_with_first(*rows, static_cast<std::size_t>(i), local);
            else
                levels_with_first_exact(planes, static_cast<std::size_t>(i), local);
        }
#pragma omp critical
        all.insert(local.begin(), local.end());
    }
    std::vector<Rational> out(all.begin(), all.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ExtRational brute_bottleneck(std::span<const Bar> first, std::span<const Bar> second, std::size_t max_bars) {
    if (first.size() > max_bars || second.size() > max_bars)
        throw OracleLimitError("brute_bottleneck: too many bars");
    std::vector<char> used(second.size(), 0);
    ExtRational best = ExtRational::infinity();
    bool found = false;
    std::function<void(std::size_t, ExtRational)> go = [&](std::size_t i, ExtRational cost) {
        if (found && best <= cost) return;
        if (i == first.size()) {
            for (std::size_t j = 0; j < second.size(); ++j)
                if (!used[j]) cost = std::max(cost, delete_cost(second[j]));
            if (!found || cost < best) best = cost;
            found = true;
            return;
        }
        go(i + 1, std::max(cost, delete_cost(first[i])));
        for (std::size_t j = 0; j < second.size(); ++j) {
            if (used[j]) continue;
            used[j] = 1;
            go(i + 1, std::max(cost, pair_cost(first[i], second[j])));
            used[j] = 0;
        }
    };
    go(0, ExtRational(0));
    return best;
}

ExtRational naive_bottleneck(std::span<const Bar> first, std::span<const Bar> second) {
    if (count_infinite(first) != count_infinite(second)) return ExtRational::infinity();
    std::set<Rational> cands{Rational(0)};
    for (const auto* side : {&first, &second})
        for (const auto& b : *side)
            if (const auto c = delete_cost(b); !c.is_infinite()) cands.insert(c.value());
    for (const auto& x : first)
        for (const auto& y : second) {
            cands.insert((x.birth - y.birth).abs());
            if (const auto c = death_gap(x.death, y.death); !c.is_infinite()) cands.insert(c.value());
        }
    const std::vector<Rational> c(cands.begin(), cands.end());
    std::size_t lo = 0, hi = c.size() - 1;
    if (!matchable(first, second, c[hi])) throw std::logic_error("naive_bottleneck: no feasible candidate");
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (matchable(first, second, c[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return c[lo];
}

std::vector<Bar> naive_barcode(const Presentation& q, const DualPoint& s) {
    const PrimeField f(q.prime);
    const std::size_t m = q.num_generators(), n = q.num_relations();
    std::vector<Rational> gp(m), rp(n);
    for (std::size_t i = 0; i < m; ++i) gp[i] = slice_value(s, q.generators[i]);
    for (std::size_t j = 0; j < n; ++j) rp[j] = slice_value(s, q.relations[j]);
    std::vector<std::size_t> rows(m), cols(n);
    for (std::size_t i = 0; i < m; ++i) rows[i] = i;
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    std::stable_sort(rows.begin(), rows.end(), [&](std::size_t x, std::size_t y) { return gp[x] < gp[y]; });
    std::stable_sort(cols.begin(), cols.end(), [&](std::size_t x, std::size_t y) { return rp[x] < rp[y]; });

    // mat[c][r]: column c of the sorted matrix, r the sorted row position.
    std::vector<std::vector<std::uint32_t>> mat(n, std::vector<std::uint32_t>(m, 0));
    std::vector<std::size_t> pos(m);
    for (std::size_t r = 0; r < m; ++r) pos[rows[r]] = r;
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& e : q.columns[cols[c]]) mat[c][pos[e.row]] = e.coeff;

    auto low = [&](std::size_t c) -> std::ptrdiff_t {
        for (std::size_t r = m; r-- > 0;)
            if (mat[c][r] != 0) return static_cast<std::ptrdiff_t>(r);
        return -1;
    };
    std::vector<std::ptrdiff_t> owner(m, -1);
    std::vector<std::ptrdiff_t> killed_by(m, -1);
    for (std::size_t c = 0; c < n; ++c) {
        for (auto l = low(c); l >= 0; l = low(c)) {
            const auto o = owner[static_cast<std::size_t>(l)];
            if (o < 0) {
                owner[static_cast<std::size_t>(l)] = static_cast<std::ptrdiff_t>(c);
                killed_by[static_cast<std::size_t>(l)] = static_cast<std::ptrdiff_t>(c);
                break;
            }
            auto& src = mat[static_cast<std::size_t>(o)];
            const auto factor = f.div(mat[c][static_cast<std::size_t>(l)], src[static_cast<std::size_t>(l)]);
            for (std::size_t r = 0; r < m; ++r) mat[c][r] = f.sub(mat[c][r], f.mul(factor, src[r]));
        }
    }
    std::vector<Bar> bars;
    for (std::size_t r = 0; r < m; ++r) {
        const Rational& birth = gp[rows[r]];
        if (killed_by[r] < 0) {
            bars.push_back({birth, ExtRational::infinity()});
            continue;
        }
        const Rational& death = rp[cols[static_cast<std::size_t>(killed_by[r])]];
        if (birth != death) bars.push_back({birth, ExtRational(death)});
    }
    std::sort(bars.begin(), bars.end());
    return bars;
}

std::size_t rank_oracle(const Presentation& q, const DualPoint& s, const Rational& t, const Rational& t2) {
    if (t2 < t) throw std::invalid_argument("rank_oracle: t > t'");
    const PrimeField f(q.prime);
    std::vector<std::vector<std::uint32_t>> rels;
    for (std::size_t j = 0; j < q.num_relations(); ++j)
        if (slice_value(s, q.relations[j]) <= t2) rels.push_back(dense_column(q, j));
    auto both = rels;
    for (std::size_t i = 0; i < q.num_generators(); ++i)
        if (slice_value(s, q.generators[i]) <= t) {
            std::vector<std::uint32_t> e(q.num_generators(), 0);
            e[i] = 1;
            both.push_back(std::move(e));
        }
    return rank_of(std::move(both), f) - rank_of(std::move(rels), f);
}

bool naive_decide_leq_oneside(const Presentation& q, const Presentation& q2, const Rational& lambda) {
    if (lambda.sign() < 0) throw std::invalid_argument("naive_decide_leq: negative lambda");
    std::vector<LinePrimitive> prims;
    for (auto& l : t_lambda_lines(all_grades(q, q2), lambda)) prims.push_back({std::move(l), Provenance::l_join, 0, 0, 0});
    const auto arr = build_arrangement(std::move(prims));
    for (const auto& face : arr.faces) {
        const DualPoint s{face.representative.a, face.representative.b};
        const auto b1 = naive_barcode(q, s);
        const auto b2 = naive_barcode(q2, s);
        if (count_infinite(b1) != count_infinite(b2) || !matchable(b1, b2, lambda)) return false;
    }
    return true;
}

bool naive_decide_leq(const Presentation& q, const Presentation& q2, const Rational& lambda) {
    return naive_decide_leq_oneside(q, q2, lambda) &&
           naive_decide_leq_oneside(swap_coordinates(q), swap_coordinates(q2), lambda);
}

std::vector<Rational> naive_vertex_levels(std::span<const Grade> grades) { return vertex_levels(grades, true); }

std::vector<Rational> naive_vertex_levels_serial(std::span<const Grade> grades) {
    return vertex_levels(grades, false);
}

ExtRational naive_matching_distance(const Presentation& q, const Presentation& q2, std::size_t max_elements) {
    if (q.size() > max_elements || q2.size() > max_elements)
        throw OracleLimitError("naive_matching_distance: instance too large");
    if (infinite_bars(q) != infinite_bars(q2)) return ExtRational::infinity();
    Rational best(0);
    for (const bool swapped : {false, true}) {
        const auto a = swapped ? swap_coordinates(q) : q;
        const auto b = swapped ? swap_coordinates(q2) : q2;
        auto levels = naive_vertex_levels(all_grades(a, b));
        levels.insert(levels.begin(), Rational(0));
        std::size_t lo = 0, hi = levels.size() - 1;
        if (!naive_decide_leq_oneside(a, b, levels[hi]))
            throw std::logic_error("naive_matching_distance: no candidate level decides true");
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (naive_decide_leq_oneside(a, b, levels[mid]))
                hi = mid;
            else
                lo = mid + 1;
        }
        best = max(best, levels[lo]);
    }
    return best;
}

SampledBound sampled_lower_bound(const Presentation& q, const Presentation& q2, const GridSpec& grid) {
    if (grid.na == 0 || grid.nb == 0) throw std::invalid_argument("sampled_lower_bound: empty grid");
    SampledBound out{ExtRational(0), {}};
    for (const bool swapped : {false, true}) {
        const auto a = swapped ? swap_coordinates(q) : q;
        const auto b = swapped ? swap_coordinates(q2) : q2;
        const auto g = all_grades(a, b);
        Rational lo = grid.b_lo.value_or(Rational(0)), hi = grid.b_hi.value_or(Rational(0));
        if (!g.empty()) {
            Rational min_y = g[0].y, max_y = g[0].y, max_x = g[0].x;
            for (const auto& p : g) {
                min_y = min(min_y, p.y);
                max_y = max(max_y, p.y);
                max_x = max(max_x, p.x);
            }
            if (!grid.b_lo) lo = min_y - max_x - Rational(1);
            if (!grid.b_hi) hi = max_y + Rational(1);
        }
        for (std::size_t i = 1; i <= grid.na; ++i)
            for (std::size_t j = 0; j < grid.nb; ++j) {
                const Rational sa(static_cast<std::int64_t>(i), static_cast<std::int64_t>(grid.na));
                const Rational sb = grid.nb == 1 ? lo
                                                 : lo + (hi - lo) * Rational(static_cast<std::int64_t>(j),
                                                                             static_cast<std::int64_t>(grid.nb - 1));
                const DualPoint s{sa, sb};
                auto d = naive_bottleneck(naive_barcode(a, s), naive_barcode(b, s));
                if (out.value < d) out.value = d;
                out.samples.push_back({swapped, sa, sb, std::move(d)});
            }
    }
    return out;
}

}  // namespace mdist::oracle
