#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mdist/presentation.hpp"

namespace mdist {

/// Point (a, b) of the strip (0,1] x R; represents the slice y = a*x + b.
struct DualPoint {
    Rational a;
    Rational b;

    /// Throws std::invalid_argument unless 0 < a <= 1.
    static DualPoint checked(Rational a, Rational b);

    friend bool operator==(const DualPoint&, const DualPoint&) = default;
};

/// Non-vertical line b = slope * a + intercept in the dual plane.
struct DualLine {
    Rational slope;
    Rational intercept;

    [[nodiscard]] Rational at(const Rational& a) const { return slope * a + intercept; }
    friend bool operator==(const DualLine&, const DualLine&) = default;
};

/// y-coordinate of the least point on slice s that is >= p.
Rational push(const DualPoint& s, const Grade& p);

/// The line of all slices through p: b = -p_x * a + p_y.
DualLine dual_of_point(const Grade& p);

/// Sign of p relative to the slice s in the primal plane: +1 above, 0 on, -1 below.
int side_of_slice(const DualPoint& s, const Grade& p);
/// Sign of the dual point s relative to the dual line: +1 above, 0 on, -1 below.
int side_of_line(const DualLine& line, const DualPoint& s);

/// Indices grouped into blocks of equal push value, blocks in increasing order.
struct SlicePreorder {
    std::vector<std::vector<std::size_t>> blocks;
};

SlicePreorder slice_preorder(std::span<const Grade> grades, const DualPoint& s);

/// Row and column permutation making the pushed presentation ordered.
/// `row_order[k]` is the generator placed at row k (and likewise for
/// columns); pushed grades are listed in the new order.
struct OrderedPresentation {
    std::vector<std::uint32_t> row_order;
    std::vector<std::uint32_t> col_order;
    std::vector<Rational> row_push;
    std::vector<Rational> col_push;
};

/// Ties between equal pushes are broken by ascending element id.
OrderedPresentation induced_ordered_presentation(const Presentation& q, const DualPoint& s);

/// Ties are broken by `tiebreak_rank[id]` (smaller first).
OrderedPresentation induced_ordered_presentation(const Presentation& q, const DualPoint& s,
                                                 std::span<const std::uint32_t> tiebreak_rank);

/// True when pushed generator grades are nondecreasing along rows and
/// pushed relation grades along columns.
bool is_ordered(const Presentation& q, const DualPoint& s, const OrderedPresentation& ordered);

}  // namespace mdist
