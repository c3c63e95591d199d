#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mdist/presentation.hpp"

namespace mdist {

/// Syntax error in `fpres v1` input; carries the 1-based line number.
class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses the `fpres v1` text format:
///
///     fpres v1
///     field <prime>
///     generators <m>
///     <x> <y>                                   (m lines)
///     relations <m'>
///     <x> <y> ; <row>:<coeff> <row>:<coeff> ...  (m' lines, rows 0-based)
///
/// `#` starts a comment. Grades are "a/b" or decimal strings, read exactly.
/// Throws FormatError on syntax errors and ValidationError when the grade
/// condition fails.
Presentation parse_presentation(std::string_view text);
Presentation read_presentation(const std::filesystem::path& path);

/// Canonical `fpres v1` text; parse_presentation inverts it.
std::string serialize_presentation(const Presentation& q);

}  // namespace mdist
