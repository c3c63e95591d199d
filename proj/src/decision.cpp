#include "mdist/decision.hpp"

#include "mdist/persistence.hpp"

namespace mdist {

std::vector<Grade> element_grades(const Presentation& q, const Presentation& q2) {
    std::vector<Grade> out;
    out.reserve(q.size() + q2.size());
    for (const auto* p : {&q, &q2}) {
        out.insert(out.end(), p->generators.begin(), p->generators.end());
        out.insert(out.end(), p->relations.begin(), p->relations.end());
    }
    return out;
}

namespace {

// One presentation carried along the walk: its RU-decomposition is kept
// ordered by (push, id) through adjacent transpositions.
class Tracked {
public:
    Tracked(const Presentation& q, const DualPoint& s)
        : q_(q), pushed_(pushed_grades(q, s)), ru_(RUState::reduce(q, induced_ordered_presentation(q, s))) {}

    std::size_t move_to(const DualPoint& s) {
        pushed_ = pushed_grades(q_, s);
        return sort_axis(Axis::rows) + sort_axis(Axis::columns);
    }

    [[nodiscard]] std::vector<BarPoint> bars() const {
        const auto bp = barcode_pairing(ru_, pushed_.generators, pushed_.relations);
        return bars_from_pairing(bp, pushed_.generators, pushed_.relations);
    }

private:
    std::size_t sort_axis(Axis axis) {
        const bool rows = axis == Axis::rows;
        const auto& push = rows ? pushed_.generators : pushed_.relations;
        const auto& ids = rows ? q_.generator_ids : q_.relation_ids;
        auto before = [&](std::uint32_t x, std::uint32_t y) {
            if (const auto c = push[x] <=> push[y]; c != 0) return c < 0;
            return ids[x] < ids[y];
        };
        std::size_t swaps = 0;
        const std::size_t n = rows ? ru_.num_rows() : ru_.num_cols();
        for (std::size_t k = 1; k < n; ++k) {
            for (std::size_t j = k; j > 0; --j) {
                const auto& order = rows ? ru_.row_order() : ru_.col_order();
                if (!before(order[j], order[j - 1])) break;
                ru_.transpose(axis, j - 1);
                ++swaps;
            }
        }
        return swaps;
    }

    const Presentation& q_;
    PushedGrades pushed_;
    RUState ru_;
};

DualPoint slice_at(const Arrangement& arr, std::uint32_t face) {
    const auto& p = arr.faces[face].representative;
    return {p.a, p.b};
}

}  // namespace

bool decide_leq_oneside(const Presentation& q, const Presentation& q2, const Rational& lambda,
                        const DecisionObserver& observer, DecisionStats* stats) {
    if (lambda.sign() < 0) throw std::invalid_argument("decide_leq: negative lambda");
    if (q.num_generators() == 0 && q2.num_generators() == 0) return true;

    const auto grades = element_grades(q, q2);
    const auto arr = build_arrangement(build_lines_T_lambda(grades, lambda));
    const auto walk = euler_walk(arr);
    if (stats) {
        stats->faces = arr.faces.size();
        stats->distinct_lines = arr.lines.size();
    }

    const auto start = arr.start_face();
    DualPoint s = slice_at(arr, start);
    Tracked first(q, s), second(q2, s);
    MatchGraph g{first.bars(), second.bars(), lambda};
    Matching m(g.side_size());
    bool ok = has_perfect_matching(g, m);
    if (observer) observer({start, s, g.first, g.second, ok});
    if (!ok) return false;

    for (const auto& step : walk) {
        s = slice_at(arr, step.to);
        const auto swaps = first.move_to(s) + second.move_to(s);
        g.first = first.bars();
        g.second = second.bars();
        const bool intact = m.valid_in(g);
        ok = intact || augment_constant(g, m);
        if (stats) {
            ++stats->crossings;
            stats->transpositions += swaps;
            stats->repairs += intact ? 0 : 1;
        }
        if (observer) observer({step.to, s, g.first, g.second, ok});
        if (!ok) return false;
    }
    return true;
}

bool decide_leq(const Presentation& q, const Presentation& q2, const Rational& lambda) {
    return decide_leq_oneside(q, q2, lambda) &&
           decide_leq_oneside(swap_coordinates(q), swap_coordinates(q2), lambda);
}

}  // namespace mdist
