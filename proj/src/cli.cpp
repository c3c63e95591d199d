#include "mdist/cli.hpp"

#include <ostream>
#include <stdexcept>

#include "mdist/candidates.hpp"
#include "mdist/decision.hpp"
#include "mdist/fpres.hpp"
#include "mdist/matching.hpp"
#include "mdist/oracle.hpp"
#include "mdist/persistence.hpp"

namespace mdist {

namespace {

std::pair<std::string, std::string> split_pair(const std::string& text, char sep, const char* what) {
    const auto k = text.find(sep);
    if (k == std::string::npos || text.find(sep, k + 1) != std::string::npos)
        throw std::invalid_argument(std::string("malformed ") + what + " '" + text + "'");
    return {text.substr(0, k), text.substr(k + 1)};
}

std::string format(const ExtRational& v, const std::optional<int>& digits) {
    if (v.is_infinite() || !digits) return v.str();
    return v.value().decimal(*digits) + " (approximate)";
}

int dispatch(const RunConfig& c, std::ostream& out) {
    const auto q = read_presentation(c.first);
    if (c.command == Command::validate) {
        out << "valid fpres v1: field " << q.prime << ", " << q.num_generators() << " generators, "
            << q.num_relations() << " relations\n";
        return 0;
    }
    const auto q2 = read_presentation(c.second);
    if (q.prime != q2.prime) throw std::invalid_argument("presentations over different fields");

    switch (c.command) {
        case Command::compute:
            out << format(matching_distance(q, q2, c.seed), c.decimal_digits) << '\n';
            out << "seed " << c.seed << '\n';
            return 0;
        case Command::decide: {
            const auto lambda = Rational::parse(c.lambda);
            if (lambda.sign() < 0) throw std::invalid_argument("lambda must be nonnegative");
            const bool yes = decide_leq(q, q2, lambda);
            out << (yes ? "yes" : "no") << '\n';
            return yes ? 0 : 1;
        }
        case Command::bottleneck: {
            const auto [a, b] = split_pair(c.slice, ',', "slice");
            const auto s = DualPoint::checked(Rational::parse(a), Rational::parse(b));
            out << format(bottleneck_distance(slice_barcode(q, s), slice_barcode(q2, s)), c.decimal_digits) << '\n';
            return 0;
        }
        case Command::sample: {
            oracle::GridSpec grid{c.grid_a, c.grid_b, {}, {}};
            if (!c.brange.empty()) {
                const auto [lo, hi] = split_pair(c.brange, ',', "b-range");
                grid.b_lo = Rational::parse(lo);
                grid.b_hi = Rational::parse(hi);
                if (*grid.b_hi < *grid.b_lo) throw std::invalid_argument("empty b-range");
            }
            const auto bound = oracle::sampled_lower_bound(q, q2, grid);
            out << "lower_bound " << format(bound.value, c.decimal_digits) << '\n';
            bool swapped = true;
            for (const auto& s : bound.samples) {
                if (s.swapped != swapped || &s == &bound.samples.front()) {
                    swapped = s.swapped;
                    out << (swapped ? "# coordinates swapped\n" : "# slopes at most one\n") << "a\tb\td_B\n";
                }
                out << s.a << '\t' << s.b << '\t' << format(s.distance, c.decimal_digits) << '\n';
            }
            return 0;
        }
        case Command::validate:
            break;
    }
    return 0;
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
    const auto [a, b] = split_pair(text, 'x', "grid");
    auto count = [&](const std::string& s) {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size() || v == 0) throw std::invalid_argument("malformed grid '" + text + "'");
        return static_cast<std::size_t>(v);
    };
    return {count(a), count(b)};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(config, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace mdist
