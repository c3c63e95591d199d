#include "mdist/matching.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mdist {

ExtRational edge_distance(const ExtRational& h, const ExtRational& h2) {
    if (h.is_infinite() || h2.is_infinite()) {
        if (h.is_infinite() && h2.is_infinite()) return ExtRational(0);
        return ExtRational::infinity();
    }
    return (h.value() - h2.value()).abs();
}

std::vector<BarPoint> bars_from_pairing(const BarcodePairing& bp, std::span<const Rational> generator_push,
                                        std::span<const Rational> relation_push) {
    std::vector<BarPoint> out;
    out.reserve(bp.pairs.size());
    for (const auto& p : bp.pairs)
        out.push_back({generator_push[p.generator],
                       p.relation ? ExtRational(relation_push[*p.relation]) : ExtRational::infinity()});
    return out;
}

std::vector<BarPoint> bars_from_intervals(std::span<const Interval> intervals) {
    std::vector<BarPoint> out;
    out.reserve(intervals.size());
    for (const auto& iv : intervals) out.push_back({iv.birth, iv.death});
    return out;
}

bool MatchGraph::deletable(const BarPoint& bar) const {
    return bar.death.is_finite() && bar.death.value() - bar.birth <= lambda + lambda;
}

bool MatchGraph::adjacent(std::size_t left, std::size_t right) const {
    const std::size_t a = n1();
    const std::size_t b = n2();
    if (left < a) {
        const auto& p = first[left];
        if (right < b) {
            const auto& q = second[right];
            return (p.birth - q.birth).abs() <= lambda && edge_distance(p.death, q.death) <= ExtRational(lambda);
        }
        return right - b == left && deletable(p);
    }
    if (right < b) return right == left - a && deletable(second[right]);
    return true;
}

MatchGraph build_match_graph(std::vector<BarPoint> first, std::vector<BarPoint> second, Rational lambda) {
    if (lambda.sign() < 0) throw std::invalid_argument("build_match_graph: negative lambda");
    return {std::move(first), std::move(second), std::move(lambda)};
}

std::size_t Matching::unmatched() const {
    return static_cast<std::size_t>(std::count(mate_left.begin(), mate_left.end(), none));
}

void Matching::link(std::size_t left, std::size_t right) {
    mate_left[left] = static_cast<std::int32_t>(right);
    mate_right[right] = static_cast<std::int32_t>(left);
}

void Matching::unlink_left(std::size_t left) {
    const auto r = mate_left[left];
    if (r == none) return;
    mate_left[left] = none;
    mate_right[static_cast<std::size_t>(r)] = none;
}

bool Matching::valid_in(const MatchGraph& g) const {
    if (mate_left.size() != g.side_size() || mate_right.size() != g.side_size()) return false;
    for (std::size_t u = 0; u < mate_left.size(); ++u) {
        const auto v = mate_left[u];
        if (v == none) continue;
        if (mate_right[static_cast<std::size_t>(v)] != static_cast<std::int32_t>(u)) return false;
        if (!g.adjacent(u, static_cast<std::size_t>(v))) return false;
    }
    for (std::size_t v = 0; v < mate_right.size(); ++v) {
        const auto u = mate_right[v];
        if (u != none && mate_left[static_cast<std::size_t>(u)] != static_cast<std::int32_t>(v)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

RightPool::RightPool(const MatchGraph& g, std::span<const std::uint32_t> members)
    : g_(&g), alive_(g.side_size(), 0) {
    const std::size_t b = g.n2();
    std::vector<std::uint32_t> infinite, copies;
    for (const auto v : members) {
        alive_[v] = 1;
        if (v >= b)
            copies.push_back(v);
        else if (g.second[v].is_infinite())
            infinite.push_back(v);
        else
            by_birth_.push_back(v);
    }
    const auto& bars = g.second;
    auto birth_less = [&](std::uint32_t i, std::uint32_t j) { return bars[i].birth < bars[j].birth; };
    auto death_less = [&](std::uint32_t i, std::uint32_t j) { return bars[i].death < bars[j].death; };

    std::sort(by_birth_.begin(), by_birth_.end(), birth_less);
    const std::size_t f = by_birth_.size();
    if (f > 0) {
        levels_.push_back({by_birth_, {}});
        for (std::size_t width = 2; width / 2 < f; width *= 2) {
            Level next{levels_.back().ids, {}};
            for (std::size_t s = 0; s < f; s += width) {
                const auto mid = std::min(s + width / 2, f);
                const auto end = std::min(s + width, f);
                std::inplace_merge(next.ids.begin() + static_cast<std::ptrdiff_t>(s),
                                   next.ids.begin() + static_cast<std::ptrdiff_t>(mid),
                                   next.ids.begin() + static_cast<std::ptrdiff_t>(end), death_less);
            }
            levels_.push_back(std::move(next));
        }
        level_pos_.assign(levels_.size(), std::vector<std::uint32_t>(b, 0));
        for (std::size_t l = 0; l < levels_.size(); ++l) {
            auto& lv = levels_[l];
            lv.next.resize(f + 1);
            std::iota(lv.next.begin(), lv.next.end(), 0U);
            for (std::size_t i = 0; i < f; ++i) level_pos_[l][lv.ids[i]] = static_cast<std::uint32_t>(i);
        }
    }

    std::sort(infinite.begin(), infinite.end(), birth_less);
    infinite_.ids = std::move(infinite);
    infinite_.next.resize(infinite_.ids.size() + 1);
    std::iota(infinite_.next.begin(), infinite_.next.end(), 0U);
    infinite_pos_.assign(b, 0);
    for (std::size_t i = 0; i < infinite_.ids.size(); ++i) infinite_pos_[infinite_.ids[i]] = static_cast<std::uint32_t>(i);

    copies_.ids = std::move(copies);
    copies_.next.resize(copies_.ids.size() + 1);
    std::iota(copies_.next.begin(), copies_.next.end(), 0U);
}

std::uint32_t RightPool::find(std::vector<std::uint32_t>& next, std::uint32_t i) {
    std::uint32_t root = i;
    while (next[root] != root) root = next[root];
    while (next[i] != root) {
        const auto up = next[i];
        next[i] = root;
        i = up;
    }
    return root;
}

void RightPool::erase(std::uint32_t v) {
    if (!alive_[v]) return;
    alive_[v] = 0;
    const std::size_t b = g_->n2();
    if (v >= b) {
        const auto it = std::lower_bound(copies_.ids.begin(), copies_.ids.end(), v);
        kill(copies_.next, static_cast<std::uint32_t>(it - copies_.ids.begin()));
    } else if (g_->second[v].is_infinite()) {
        kill(infinite_.next, infinite_pos_[v]);
    } else {
        for (std::size_t l = 0; l < levels_.size(); ++l) kill(levels_[l].next, level_pos_[l][v]);
    }
}

std::optional<std::uint32_t> RightPool::take_finite(const Rational& birth, const Rational& death) {
    const std::size_t f = by_birth_.size();
    if (f == 0) return std::nullopt;
    const auto& bars = g_->second;
    const Rational& lam = g_->lambda;
    const Rational blo = birth - lam, bhi = birth + lam;
    const ExtRational dlo(death - lam), dhi(death + lam);
    const auto lo = static_cast<std::size_t>(
        std::partition_point(by_birth_.begin(), by_birth_.end(), [&](std::uint32_t i) { return bars[i].birth < blo; }) -
        by_birth_.begin());
    const auto hi = static_cast<std::size_t>(
        std::partition_point(by_birth_.begin(), by_birth_.end(), [&](std::uint32_t i) { return bars[i].birth <= bhi; }) -
        by_birth_.begin());

    std::size_t s = lo;
    while (s < hi) {
        std::size_t l = 0;
        while (l + 1 < levels_.size() && s % (std::size_t{1} << (l + 1)) == 0 && s + (std::size_t{1} << (l + 1)) <= hi)
            ++l;
        const std::size_t end = s + (std::size_t{1} << l);
        auto& lv = levels_[l];
        const auto first = lv.ids.begin() + static_cast<std::ptrdiff_t>(s);
        const auto last = lv.ids.begin() + static_cast<std::ptrdiff_t>(end);
        const auto start = std::partition_point(first, last, [&](std::uint32_t i) { return bars[i].death < dlo; });
        const auto idx = find(lv.next, static_cast<std::uint32_t>(start - lv.ids.begin()));
        if (idx < end && bars[lv.ids[idx]].death <= dhi) {
            const auto v = lv.ids[idx];
            erase(v);
            return v;
        }
        s = end;
    }
    return std::nullopt;
}

std::optional<std::uint32_t> RightPool::take_infinite(const Rational& birth) {
    const auto& bars = g_->second;
    const Rational& lam = g_->lambda;
    const Rational blo = birth - lam;
    const auto start = std::partition_point(infinite_.ids.begin(), infinite_.ids.end(),
                                            [&](std::uint32_t i) { return bars[i].birth < blo; });
    const auto idx = find(infinite_.next, static_cast<std::uint32_t>(start - infinite_.ids.begin()));
    if (idx < infinite_.ids.size() && bars[infinite_.ids[idx]].birth <= birth + lam) {
        const auto v = infinite_.ids[idx];
        erase(v);
        return v;
    }
    return std::nullopt;
}

std::optional<std::uint32_t> RightPool::take_copy() {
    const auto idx = find(copies_.next, 0);
    if (idx >= copies_.ids.size()) return std::nullopt;
    const auto v = copies_.ids[idx];
    erase(v);
    return v;
}

std::optional<std::uint32_t> RightPool::take_neighbor(std::size_t left) {
    const std::size_t a = g_->n1();
    const std::size_t b = g_->n2();
    if (left < a) {
        const auto& p = g_->first[left];
        const auto hit = p.is_infinite() ? take_infinite(p.birth) : take_finite(p.birth, p.death.value());
        if (hit) return hit;
        const auto own = static_cast<std::uint32_t>(b + left);
        if (alive_[own] && g_->deletable(p)) {
            erase(own);
            return own;
        }
        return std::nullopt;
    }
    const auto j = static_cast<std::uint32_t>(left - a);
    if (alive_[j] && g_->deletable(g_->second[j])) {
        erase(j);
        return j;
    }
    return take_copy();
}

// ---------------------------------------------------------------------------

namespace {

void trim_to_graph(const MatchGraph& g, Matching& m) {
    if (m.mate_left.size() != g.side_size()) {
        m = Matching(g.side_size());
        return;
    }
    for (std::size_t u = 0; u < m.mate_left.size(); ++u) {
        const auto v = m.mate_left[u];
        if (v != Matching::none && !g.adjacent(u, static_cast<std::size_t>(v))) m.unlink_left(u);
    }
}

std::vector<std::uint32_t> all_rights(const MatchGraph& g) {
    std::vector<std::uint32_t> out(g.side_size());
    std::iota(out.begin(), out.end(), 0U);
    return out;
}

class PhaseSearch {
public:
    PhaseSearch(const MatchGraph& g, Matching& m, std::vector<int>& layer, int limit)
        : m_(m), layer_(layer), limit_(limit) {
        std::vector<std::vector<std::uint32_t>> members(static_cast<std::size_t>(limit) + 2);
        for (std::uint32_t v = 0; v < g.side_size(); ++v) {
            const auto w = m.mate_right[v];
            if (w == Matching::none) {
                members[0].push_back(v);
            } else {
                const int k = layer[static_cast<std::size_t>(w)];
                if (k >= 1 && k <= limit) members[static_cast<std::size_t>(k)].push_back(v);
            }
        }
        pools_.reserve(members.size());
        for (const auto& mem : members) pools_.emplace_back(g, mem);
    }

    bool dfs(std::size_t u) {
        const int k = layer_[u];
        if (k == limit_) {
            const auto v = pools_[0].take_neighbor(u);
            if (!v) return false;
            m_.link(u, *v);
            return true;
        }
        auto& pool = pools_[static_cast<std::size_t>(k) + 1];
        while (const auto v = pool.take_neighbor(u)) {
            const auto w = static_cast<std::size_t>(m_.mate_right[*v]);
            if (dfs(w)) {
                m_.link(u, *v);
                return true;
            }
        }
        return false;
    }

private:
    Matching& m_;
    std::vector<int>& layer_;
    int limit_;
    std::vector<RightPool> pools_;  // [0] free rights, [k] rights matched into layer k
};

}  // namespace

bool has_perfect_matching(const MatchGraph& g, Matching& m) {
    trim_to_graph(g, m);
    const std::size_t n = g.side_size();
    const auto everyone = all_rights(g);
    std::vector<int> layer(n);
    while (true) {
        std::fill(layer.begin(), layer.end(), -1);
        std::vector<std::size_t> queue;
        for (std::size_t u = 0; u < n; ++u)
            if (m.mate_left[u] == Matching::none) {
                layer[u] = 0;
                queue.push_back(u);
            }
        if (queue.empty()) return true;

        RightPool pool(g, everyone);
        int limit = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t u = queue[head];
            if (limit >= 0 && layer[u] >= limit) break;
            while (const auto v = pool.take_neighbor(u)) {
                const auto w = m.mate_right[*v];
                if (w == Matching::none) {
                    limit = layer[u];
                    break;
                }
                if (layer[static_cast<std::size_t>(w)] < 0) {
                    layer[static_cast<std::size_t>(w)] = layer[u] + 1;
                    queue.push_back(static_cast<std::size_t>(w));
                }
            }
        }
        if (limit < 0) return false;

        PhaseSearch search(g, m, layer, limit);
        for (std::size_t u = 0; u < n; ++u)
            if (layer[u] == 0 && m.mate_left[u] == Matching::none) search.dfs(u);
    }
}

bool augment_constant(const MatchGraph& g, Matching& m) {
    trim_to_graph(g, m);
    const std::size_t n = g.side_size();
    const auto everyone = all_rights(g);
    std::vector<std::int32_t> via(n, Matching::none);  // right -> left it was reached from
    for (std::size_t root = 0; root < n; ++root) {
        if (m.mate_left[root] != Matching::none) continue;
        RightPool pool(g, everyone);
        std::vector<std::size_t> queue{root};
        std::int32_t found = Matching::none;
        for (std::size_t head = 0; head < queue.size() && found == Matching::none; ++head) {
            const std::size_t x = queue[head];
            while (const auto v = pool.take_neighbor(x)) {
                via[*v] = static_cast<std::int32_t>(x);
                const auto w = m.mate_right[*v];
                if (w == Matching::none) {
                    found = static_cast<std::int32_t>(*v);
                    break;
                }
                queue.push_back(static_cast<std::size_t>(w));
            }
        }
        if (found == Matching::none) return false;
        auto v = static_cast<std::size_t>(found);
        while (true) {
            const auto x = static_cast<std::size_t>(via[v]);
            const auto prev = m.mate_left[x];
            m.link(x, v);
            if (x == root) break;
            v = static_cast<std::size_t>(prev);
        }
    }
    return true;
}

ExtRational bottleneck_distance(std::span<const BarPoint> first, std::span<const BarPoint> second) {
    auto infinite_count = [](std::span<const BarPoint> bars) {
        return std::count_if(bars.begin(), bars.end(), [](const BarPoint& p) { return p.is_infinite(); });
    };
    if (infinite_count(first) != infinite_count(second)) return ExtRational::infinity();

    std::set<Rational> cand{Rational(0)};
    for (const auto& p : first)
        for (const auto& q : second) {
            cand.insert((p.birth - q.birth).abs());
            if (p.death.is_finite() && q.death.is_finite()) cand.insert((p.death.value() - q.death.value()).abs());
        }
    for (const auto bars : {first, second})
        for (const auto& p : bars)
            if (p.death.is_finite()) cand.insert((p.death.value() - p.birth) / Rational(2));
    const std::vector<Rational> levels(cand.begin(), cand.end());

    MatchGraph g{{first.begin(), first.end()}, {second.begin(), second.end()}, Rational(0)};
    auto feasible = [&](const Rational& lam) {
        g.lambda = lam;
        Matching m(g.side_size());
        return has_perfect_matching(g, m);
    };
    // The largest candidate always admits a perfect matching.
    std::size_t lo = 0, hi = levels.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(levels[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return levels[lo];
}

ExtRational bottleneck_distance(std::span<const Interval> first, std::span<const Interval> second) {
    const auto a = bars_from_intervals(first);
    const auto b = bars_from_intervals(second);
    return bottleneck_distance(std::span<const BarPoint>(a), std::span<const BarPoint>(b));
}

}  // namespace mdist
