#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mdist/arrangement.hpp"
#include "mdist/matching.hpp"
#include "mdist/presentation.hpp"
#include "mdist/slices.hpp"

namespace mdist {

/// What the walk knows when it settles on a face.
struct FaceVisit {
    std::uint32_t face;
    const DualPoint& slice;
    const std::vector<BarPoint>& first;
    const std::vector<BarPoint>& second;
    bool perfect;
};

using DecisionObserver = std::function<void(const FaceVisit&)>;

struct DecisionStats {
    std::size_t faces = 0;
    std::size_t distinct_lines = 0;
    std::size_t crossings = 0;
    std::size_t transpositions = 0;
    std::size_t repairs = 0;  // crossings that needed augmentation
};

/// Grades of all generators and relations of q, then of q2.
std::vector<Grade> element_grades(const Presentation& q, const Presentation& q2);

/// d_B(M^s, N^s) <= lambda for every slice of slope at most one, decided by
/// walking the faces of the arrangement T_lambda while maintaining both
/// RU-decompositions and a perfect matching.
bool decide_leq_oneside(const Presentation& q, const Presentation& q2, const Rational& lambda,
                        const DecisionObserver& observer = {}, DecisionStats* stats = nullptr);

/// Both the slope <= 1 side and the coordinate-swapped side.
bool decide_leq(const Presentation& q, const Presentation& q2, const Rational& lambda);

}  // namespace mdist
