#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace mdist {

enum class Command { compute, decide, bottleneck, sample, validate };

struct RunConfig {
    Command command = Command::compute;
    std::string first;
    std::string second;  // unused by validate
    std::string lambda;  // decide
    std::string slice;   // bottleneck, "a,b"
    std::uint64_t seed = 1;
    std::size_t grid_a = 50;
    std::size_t grid_b = 50;
    std::string brange;  // sample, "lo,hi"; empty for the default range
    std::optional<int> decimal_digits;
};

/// Parses "NAxNB".
std::pair<std::size_t, std::size_t> parse_grid(const std::string& text);

/// Runs one command. Returns the process exit status: 0 on success (and
/// `yes` for decide), 1 for a `no` answer, 2 on any error (reported on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mdist
