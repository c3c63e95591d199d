#include "mdist/slices.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mdist {

DualPoint DualPoint::checked(Rational a, Rational b) {
    if (a.sign() <= 0 || a > Rational(1))
        throw std::invalid_argument("dual point needs 0 < a <= 1, got a = " + a.str());
    return {std::move(a), std::move(b)};
}

Rational push(const DualPoint& s, const Grade& p) {
    Rational on_slice = s.a * p.x + s.b;
    return p.y >= on_slice ? p.y : on_slice;
}

DualLine dual_of_point(const Grade& p) { return {-p.x, p.y}; }

int side_of_slice(const DualPoint& s, const Grade& p) {
    const auto c = p.y <=> s.a * p.x + s.b;
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

int side_of_line(const DualLine& line, const DualPoint& s) {
    const auto c = s.b <=> line.at(s.a);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

SlicePreorder slice_preorder(std::span<const Grade> grades, const DualPoint& s) {
    std::vector<Rational> pushes;
    pushes.reserve(grades.size());
    for (const auto& g : grades) pushes.push_back(push(s, g));
    std::vector<std::size_t> order(grades.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return pushes[i] < pushes[j]; });

    SlicePreorder out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k == 0 || pushes[order[k]] != pushes[order[k - 1]]) out.blocks.emplace_back();
        out.blocks.back().push_back(order[k]);
    }
    return out;
}

namespace {

std::vector<std::uint32_t> sorted_by_push(const std::vector<Grade>& grades, const std::vector<std::uint32_t>& ids,
                                          const DualPoint& s, std::span<const std::uint32_t> rank,
                                          std::vector<Rational>& pushed_out) {
    std::vector<Rational> pushes;
    pushes.reserve(grades.size());
    for (const auto& g : grades) pushes.push_back(push(s, g));
    std::vector<std::uint32_t> order(grades.size());
    std::iota(order.begin(), order.end(), 0U);
    auto key = [&](std::uint32_t i) { return rank.empty() ? ids[i] : rank[ids[i]]; };
    std::sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
        if (const auto c = pushes[i] <=> pushes[j]; c != 0) return c < 0;
        return key(i) < key(j);
    });
    pushed_out.clear();
    for (const auto i : order) pushed_out.push_back(pushes[i]);
    return order;
}

}  // namespace

OrderedPresentation induced_ordered_presentation(const Presentation& q, const DualPoint& s) {
    return induced_ordered_presentation(q, s, {});
}

OrderedPresentation induced_ordered_presentation(const Presentation& q, const DualPoint& s,
                                                 std::span<const std::uint32_t> tiebreak_rank) {
    OrderedPresentation out;
    out.row_order = sorted_by_push(q.generators, q.generator_ids, s, tiebreak_rank, out.row_push);
    out.col_order = sorted_by_push(q.relations, q.relation_ids, s, tiebreak_rank, out.col_push);
    return out;
}

bool is_ordered(const Presentation& q, const DualPoint& s, const OrderedPresentation& ordered) {
    auto check = [&](const std::vector<Grade>& grades, const std::vector<std::uint32_t>& order) {
        if (order.size() != grades.size()) return false;
        for (std::size_t k = 1; k < order.size(); ++k)
            if (push(s, grades[order[k - 1]]) > push(s, grades[order[k]])) return false;
        return true;
    };
    return check(q.generators, ordered.row_order) && check(q.relations, ordered.col_order);
}

}  // namespace mdist
