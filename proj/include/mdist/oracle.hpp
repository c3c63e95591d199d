#pragma once

// Brute-force references. Nothing here goes through the reduction, matching,
// decision or candidate code of the main path.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdist/presentation.hpp"
#include "mdist/rational.hpp"
#include "mdist/slices.hpp"

namespace mdist::oracle {

class OracleLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A bar [birth, death) of a slice barcode; death may be infinite.
struct Bar {
    Rational birth;
    ExtRational death;

    friend bool operator==(const Bar&, const Bar&) = default;
    friend auto operator<=>(const Bar& x, const Bar& y) {
        if (const auto c = x.birth <=> y.birth; c != 0) return c;
        return x.death <=> y.death;
    }
};

/// Exhaustive minimum over all partial matchings. Throws OracleLimitError
/// above `max_bars` bars on either side.
ExtRational brute_bottleneck(std::span<const Bar> first, std::span<const Bar> second, std::size_t max_bars = 6);

/// Bottleneck distance by trying every candidate value with Kuhn's matching.
ExtRational naive_bottleneck(std::span<const Bar> first, std::span<const Bar> second);

/// Slice barcode by textbook column reduction of the pushed matrix; empty
/// bars dropped, sorted.
std::vector<Bar> naive_barcode(const Presentation& q, const DualPoint& s);

/// rank of M^s_t -> M^s_t' as rank(G_t + R_t') - rank(R_t') over F_p.
std::size_t rank_oracle(const Presentation& q, const DualPoint& s, const Rational& t, const Rational& t2);

/// AND over every face of T_lambda, on both coordinate sides, of a
/// from-scratch bottleneck test at the face representative.
bool naive_decide_leq(const Presentation& q, const Presentation& q2, const Rational& lambda);
bool naive_decide_leq_oneside(const Presentation& q, const Presentation& q2, const Rational& lambda);

/// Sorted distinct positive lambda-levels of all triple intersections of the
/// candidate planes of the grades. The threaded and serial variants agree.
std::vector<Rational> naive_vertex_levels(std::span<const Grade> grades);
std::vector<Rational> naive_vertex_levels_serial(std::span<const Grade> grades);

/// Full-candidate matching distance. Throws OracleLimitError when either
/// presentation has more than `max_elements` generators plus relations.
ExtRational naive_matching_distance(const Presentation& q, const Presentation& q2, std::size_t max_elements = 12);

struct GridSpec {
    std::size_t na = 50;
    std::size_t nb = 50;
    /// b-range; defaults to [min_y - max_x - 1, max_y + 1] over all grades.
    std::optional<Rational> b_lo;
    std::optional<Rational> b_hi;
};

struct GridSample {
    bool swapped;  // sampled on the coordinate-swapped side
    Rational a;
    Rational b;
    ExtRational distance;
};

struct SampledBound {
    ExtRational value;
    std::vector<GridSample> samples;
};

/// Maximum of d_B over the grid a = k/na (k = 1..na), nb evenly spaced b
/// values, on both sides.
SampledBound sampled_lower_bound(const Presentation& q, const Presentation& q2, const GridSpec& grid = {});

}  // namespace mdist::oracle
