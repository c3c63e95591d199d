#pragma once

#include "mdist/fpres.hpp"
#include "mdist/presentation.hpp"

namespace mdist::testing {

// Two generators at (0,2), (2,0) and one relation at (4,4) killing their sum.
inline const char* const fig1_text =
    "fpres v1\n"
    "field 2\n"
    "generators 2\n"
    "0 2\n"
    "2 0\n"
    "relations 1\n"
    "4 4 ; 0:1 1:1\n";

inline Presentation fig1() { return parse_presentation(fig1_text); }

inline Presentation point_module(std::int64_t x, std::int64_t y) {
    return make_presentation(2, {{Rational(x), Rational(y)}}, {}, {});
}

inline Presentation zero_module() { return make_presentation(2, {}, {}, {}); }

}  // namespace mdist::testing
