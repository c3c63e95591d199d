#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdist/persistence.hpp"
#include "mdist/rational.hpp"

namespace mdist {

/// A bar as a point (birth, death) of the persistence diagram.
struct BarPoint {
    Rational birth;
    ExtRational death;

    [[nodiscard]] bool is_infinite() const { return death.is_infinite(); }
    friend bool operator==(const BarPoint&, const BarPoint&) = default;
};

/// |h - h'| with d(inf, inf) = 0 and d(inf, finite) = inf.
ExtRational edge_distance(const ExtRational& h, const ExtRational& h2);

/// One bar per generator, in generator order; empty pairs give zero-length bars.
std::vector<BarPoint> bars_from_pairing(const BarcodePairing& bp, std::span<const Rational> generator_push,
                                        std::span<const Rational> relation_push);
std::vector<BarPoint> bars_from_intervals(std::span<const Interval> intervals);

/// The bipartite graph G^lambda with implicit edges.
///
/// Left vertices: the bars of the first barcode (0..n1-1), then one copy per
/// bar of the second barcode (n1..n1+n2-1). Right vertices: the bars of the
/// second barcode (0..n2-1), then one copy per bar of the first (n2..).
/// A bar is adjacent to its own copy when its length is at most 2 lambda;
/// copies are pairwise adjacent.
struct MatchGraph {
    std::vector<BarPoint> first;
    std::vector<BarPoint> second;
    Rational lambda;

    [[nodiscard]] std::size_t n1() const { return first.size(); }
    [[nodiscard]] std::size_t n2() const { return second.size(); }
    [[nodiscard]] std::size_t side_size() const { return first.size() + second.size(); }
    [[nodiscard]] bool adjacent(std::size_t left, std::size_t right) const;
    /// Bar length at most 2 lambda (finite bars only).
    [[nodiscard]] bool deletable(const BarPoint& bar) const;
};

MatchGraph build_match_graph(std::vector<BarPoint> first, std::vector<BarPoint> second, Rational lambda);

struct Matching {
    static constexpr std::int32_t none = -1;
    std::vector<std::int32_t> mate_left;
    std::vector<std::int32_t> mate_right;

    explicit Matching(std::size_t n = 0) : mate_left(n, none), mate_right(n, none) {}
    [[nodiscard]] std::size_t unmatched() const;
    [[nodiscard]] bool is_perfect() const { return unmatched() == 0; }
    void link(std::size_t left, std::size_t right);
    void unlink_left(std::size_t left);
    /// Every matched pair is an edge of g.
    [[nodiscard]] bool valid_in(const MatchGraph& g) const;
};

/// Deletable index over a subset of right vertices answering "some remaining
/// neighbor of this left vertex". Finite bars sit in a merge-sort tree over
/// birth with death-sorted blocks; each level carries a next-alive
/// union-find, so removal and queries cost O(log^2 n).
class RightPool {
public:
    RightPool(const MatchGraph& g, std::span<const std::uint32_t> members);
    /// Removes and returns a pool member adjacent to `left`.
    std::optional<std::uint32_t> take_neighbor(std::size_t left);
    void erase(std::uint32_t right);
    [[nodiscard]] bool contains(std::uint32_t right) const { return alive_[right] != 0; }

private:
    struct Level {
        std::vector<std::uint32_t> ids;  // bar indices, death-sorted within blocks
        std::vector<std::uint32_t> next;  // union-find parent, size + 1
    };
    struct Line {
        std::vector<std::uint32_t> ids;
        std::vector<std::uint32_t> next;
    };
    static std::uint32_t find(std::vector<std::uint32_t>& next, std::uint32_t i);
    static void kill(std::vector<std::uint32_t>& next, std::uint32_t i) { next[i] = i + 1; }

    std::optional<std::uint32_t> take_finite(const Rational& birth, const Rational& death);
    std::optional<std::uint32_t> take_infinite(const Rational& birth);
    std::optional<std::uint32_t> take_copy();

    const MatchGraph* g_;
    std::vector<std::uint8_t> alive_;
    // finite bars of the second barcode
    std::vector<std::uint32_t> by_birth_;
    std::vector<std::uint32_t> birth_rank_;  // bar -> position in by_birth_
    std::vector<Level> levels_;
    std::vector<std::vector<std::uint32_t>> level_pos_;  // level -> bar -> index in ids
    Line infinite_;                                      // infinite bars sorted by birth
    std::vector<std::uint32_t> infinite_pos_;
    Line copies_;                                        // copy vertices by index
};

/// Hopcroft-Karp with neighbor queries, starting from `m` (trimmed to edges
/// of g). Returns true iff the resulting maximum matching is perfect.
bool has_perfect_matching(const MatchGraph& g, Matching& m);

/// Repairs a matching with few free vertices by one augmenting-path search
/// per free left vertex. Returns false as soon as one free vertex cannot be
/// augmented, in which case g has no perfect matching.
bool augment_constant(const MatchGraph& g, Matching& m);

/// Smallest lambda admitting a perfect matching; inf when the numbers of
/// infinite bars differ.
ExtRational bottleneck_distance(std::span<const BarPoint> first, std::span<const BarPoint> second);
ExtRational bottleneck_distance(std::span<const Interval> first, std::span<const Interval> second);

}  // namespace mdist
