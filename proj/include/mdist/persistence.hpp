#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdist/field.hpp"
#include "mdist/presentation.hpp"
#include "mdist/slices.hpp"

namespace mdist {

/// One entry of a barcode pairing. Indices refer to the presentation's
/// generator and relation lists. `relation` empty means the pair (g, inf).
struct BarcodePair {
    std::uint32_t generator = 0;
    std::optional<std::uint32_t> relation;
    /// Generator and relation push to the same value: a zero-length bar.
    bool empty = false;

    friend bool operator==(const BarcodePair&, const BarcodePair&) = default;
};

/// Exactly one pair per generator, listed in generator index order.
struct BarcodePairing {
    std::vector<BarcodePair> pairs;
};

/// Half-open interval [birth, death).
struct Interval {
    Rational birth;
    ExtRational death;

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval& a, const Interval& b) {
        if (const auto c = a.birth <=> b.birth; c != 0) return c;
        return a.death <=> b.death;
    }
};

enum class DeltaKind {
    none,
    /// One generator changes partner (possibly to or from infinity).
    reassign,
    /// Two generators exchange their relations.
    swap_partners,
};

struct PairChange {
    std::uint32_t generator;
    std::optional<std::uint32_t> before;
    std::optional<std::uint32_t> after;
};

struct PairingDelta {
    DeltaKind kind = DeltaKind::none;
    std::vector<PairChange> changes;
};

enum class Axis { rows, columns };

/// RU-decomposition of a permuted presentation matrix: D = R * U with R
/// reduced (pivots in distinct rows) and U unit upper triangular.
///
/// R and U are stored dense, indexed by the current row/column positions,
/// so an adjacent transposition costs O(m + m') field operations.
class RUState {
public:
    /// Standard column reduction of q with rows/columns arranged as given.
    static RUState reduce(const Presentation& q, std::span<const std::uint32_t> row_order,
                          std::span<const std::uint32_t> col_order);
    static RUState reduce(const Presentation& q, const OrderedPresentation& ordered) {
        return reduce(q, ordered.row_order, ordered.col_order);
    }

    /// Swaps the elements at positions `pos` and `pos + 1` of the given axis
    /// and restores the decomposition.
    PairingDelta transpose(Axis axis, std::size_t pos);

    [[nodiscard]] std::size_t num_rows() const { return row_at_.size(); }
    [[nodiscard]] std::size_t num_cols() const { return col_at_.size(); }
    [[nodiscard]] std::uint32_t prime() const { return field_.prime(); }

    [[nodiscard]] const std::vector<std::uint32_t>& row_order() const { return row_at_; }
    [[nodiscard]] const std::vector<std::uint32_t>& col_order() const { return col_at_; }
    [[nodiscard]] std::size_t row_position(std::uint32_t generator) const { return row_pos_[generator]; }
    [[nodiscard]] std::size_t col_position(std::uint32_t relation) const { return col_pos_[relation]; }

    /// Relation whose reduced column has its pivot in this generator's row.
    [[nodiscard]] std::optional<std::uint32_t> partner_of_generator(std::uint32_t generator) const;
    [[nodiscard]] std::optional<std::uint32_t> partner_of_relation(std::uint32_t relation) const;

    /// Entries by current position: r(row_pos, col_pos), u(col_pos, col_pos).
    [[nodiscard]] std::uint32_t r(std::size_t row, std::size_t col) const { return r_[col][row]; }
    [[nodiscard]] std::uint32_t u(std::size_t row, std::size_t col) const { return u_[col][row]; }

    /// Pivots in pairwise distinct rows and cached pivot maps consistent.
    [[nodiscard]] bool is_reduced() const;
    /// U unit upper triangular.
    [[nodiscard]] bool u_is_unit_upper() const;
    /// R * U equals q with rows and columns in the current order.
    [[nodiscard]] bool reproduces(const Presentation& q) const;

    /// Debug dump of orders, R, U and pivots; not a stable format.
    [[nodiscard]] std::string dump() const;

private:
    explicit RUState(std::uint32_t prime) : field_(prime) {}

    void add_column(std::size_t src, std::size_t dst, std::uint32_t coeff);
    void refresh_pivot(std::size_t col);
    [[nodiscard]] std::optional<std::size_t> scan_pivot(std::size_t col) const;
    PairingDelta transpose_rows(std::size_t pos);
    PairingDelta transpose_columns(std::size_t pos);

    PrimeField field_;
    std::vector<std::uint32_t> row_at_, row_pos_;
    std::vector<std::uint32_t> col_at_, col_pos_;
    std::vector<std::vector<std::uint32_t>> r_;  // r_[col][row]
    std::vector<std::vector<std::uint32_t>> u_;  // u_[col][row]
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> low_;        // col -> pivot row or npos
    std::vector<std::size_t> pivot_col_;  // row -> col or npos
};

/// Pairs from the pivots of R; unpivoted generators are paired with infinity.
/// Pairs whose pushed grades coincide are flagged `empty`.
BarcodePairing barcode_pairing(const RUState& ru, std::span<const Rational> generator_push,
                               std::span<const Rational> relation_push);

/// Multiset of intervals (sorted) of the non-empty pairs.
std::vector<Interval> barcode(const BarcodePairing& bp, std::span<const Rational> generator_push,
                              std::span<const Rational> relation_push);

/// Pushes of all generators and relations at s, in index order.
struct PushedGrades {
    std::vector<Rational> generators;
    std::vector<Rational> relations;
};
PushedGrades pushed_grades(const Presentation& q, const DualPoint& s);

/// Barcode of the module presented by q restricted to the slice s.
std::vector<Interval> slice_barcode(const Presentation& q, const DualPoint& s);

}  // namespace mdist
