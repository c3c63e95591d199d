#pragma once

// Random instance generators shared by unit, acceptance and bench targets.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "mdist/persistence.hpp"
#include "mdist/presentation.hpp"

namespace mdist::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random presentation with integer grades in [0, grade_max]. Each relation
/// gets a random support and a grade at or above the join of its rows.
inline Presentation random_presentation(Rng& rng, std::size_t generators, std::size_t relations,
                                        std::int64_t grade_max = 8, std::uint32_t prime = 2) {
    std::vector<Grade> gens;
    for (std::size_t i = 0; i < generators; ++i)
        gens.push_back({Rational(uniform(rng, 0, grade_max)), Rational(uniform(rng, 0, grade_max))});
    std::vector<Grade> rels;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> cols;
    for (std::size_t j = 0; j < relations; ++j) {
        std::vector<std::pair<std::uint32_t, std::int64_t>> col;
        std::int64_t x = 0, y = 0;
        const auto k = generators == 0 ? 0 : uniform(rng, 1, std::min<std::int64_t>(3, generators));
        std::vector<std::uint32_t> rows(generators);
        for (std::uint32_t i = 0; i < generators; ++i) rows[i] = i;
        std::shuffle(rows.begin(), rows.end(), rng);
        for (std::int64_t t = 0; t < k; ++t) {
            const auto r = rows[static_cast<std::size_t>(t)];
            col.emplace_back(r, uniform(rng, 1, prime - 1));
            x = std::max(x, gens[r].x.numerator().get_si());
            y = std::max(y, gens[r].y.numerator().get_si());
        }
        rels.push_back({Rational(uniform(rng, x, grade_max)), Rational(uniform(rng, y, grade_max))});
        cols.push_back(std::move(col));
    }
    return make_presentation(prime, std::move(gens), std::move(rels), cols);
}

/// Random presentation with `total` generators plus relations, at least one generator.
inline Presentation random_presentation_total(Rng& rng, std::size_t total, std::int64_t grade_max = 8,
                                              std::uint32_t prime = 2) {
    const auto m = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(std::max<std::size_t>(total, 1))));
    return random_presentation(rng, m, total - std::min(total, m), grade_max, prime);
}

/// Random barcode with at most `max_bars` bars; endpoints are multiples of 1/2.
inline std::vector<Interval> random_barcode(Rng& rng, std::size_t max_bars, std::int64_t range = 10) {
    std::vector<Interval> out;
    const auto n = uniform(rng, 0, static_cast<std::int64_t>(max_bars));
    for (std::int64_t i = 0; i < n; ++i) {
        const Rational b(uniform(rng, 0, 2 * range), 2);
        if (uniform(rng, 0, 4) == 0)
            out.push_back({b, ExtRational::infinity()});
        else
            out.push_back({b, ExtRational(b + Rational(uniform(rng, 1, 2 * range), 2))});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mdist::testing
