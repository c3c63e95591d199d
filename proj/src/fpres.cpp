#include "mdist/fpres.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "mdist/field.hpp"

namespace mdist {
namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::istringstream in{std::string(raw)};
        std::string tok;
        while (in >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

std::int64_t parse_int(const std::string& tok, std::size_t line, const char* what) {
    std::int64_t value = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw FormatError(line, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

std::size_t parse_count(const Line& line, const char* keyword) {
    if (line.tokens.size() != 2 || line.tokens[0] != keyword)
        throw FormatError(line.number, std::string("expected '") + keyword + " <count>'");
    const auto n = parse_int(line.tokens[1], line.number, "a count");
    if (n < 0) throw FormatError(line.number, "negative count");
    return static_cast<std::size_t>(n);
}

Rational parse_coordinate(const std::string& tok, std::size_t line) {
    try {
        return Rational::parse(tok);
    } catch (const std::invalid_argument& e) {
        throw FormatError(line, e.what());
    }
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
    const auto lines = tokenize(text);
    std::size_t at = 0;
    auto next = [&](const char* expected) -> const Line& {
        if (at >= lines.size()) {
            const std::size_t last = lines.empty() ? 1 : lines.back().number;
            throw FormatError(last, std::string("unexpected end of input, expected ") + expected);
        }
        return lines[at++];
    };

    const auto& header = next("header");
    if (header.tokens.size() != 2 || header.tokens[0] != "fpres" || header.tokens[1] != "v1")
        throw FormatError(header.number, "expected header 'fpres v1'");

    const auto& field_line = next("field");
    if (field_line.tokens.size() != 2 || field_line.tokens[0] != "field")
        throw FormatError(field_line.number, "expected 'field <prime>'");
    const auto p = parse_int(field_line.tokens[1], field_line.number, "a prime");
    if (p < 2 || p > 0x7fffffff || !PrimeField::is_prime(static_cast<std::uint32_t>(p)))
        throw FormatError(field_line.number, "field characteristic must be a prime below 2^31");
    const PrimeField field(static_cast<std::uint32_t>(p));

    Presentation q;
    q.prime = field.prime();

    const std::size_t m = parse_count(next("generators"), "generators");
    for (std::size_t i = 0; i < m; ++i) {
        const auto& line = next("generator grade");
        if (line.tokens.size() != 2) throw FormatError(line.number, "expected '<x> <y>' for a generator");
        q.generators.push_back({parse_coordinate(line.tokens[0], line.number),
                                parse_coordinate(line.tokens[1], line.number)});
    }

    const std::size_t mr = parse_count(next("relations"), "relations");
    for (std::size_t j = 0; j < mr; ++j) {
        const auto& line = next("relation");
        if (line.tokens.size() < 2) throw FormatError(line.number, "expected '<x> <y> ; <row>:<coeff> ...'");
        q.relations.push_back({parse_coordinate(line.tokens[0], line.number),
                               parse_coordinate(line.tokens[1], line.number)});
        std::size_t k = 2;
        if (k < line.tokens.size()) {
            if (line.tokens[k] != ";") throw FormatError(line.number, "expected ';' after relation grade");
            ++k;
        }
        SparseColumn col;
        std::set<std::uint32_t> rows;
        for (; k < line.tokens.size(); ++k) {
            const auto& tok = line.tokens[k];
            const auto colon = tok.find(':');
            if (colon == std::string::npos) throw FormatError(line.number, "expected '<row>:<coeff>', got '" + tok + "'");
            const auto row = parse_int(tok.substr(0, colon), line.number, "a row index");
            const auto coeff = parse_int(tok.substr(colon + 1), line.number, "a coefficient");
            if (row < 0 || static_cast<std::size_t>(row) >= m)
                throw FormatError(line.number, "row index " + std::to_string(row) + " out of range");
            if (!rows.insert(static_cast<std::uint32_t>(row)).second)
                throw FormatError(line.number, "row " + std::to_string(row) + " listed twice");
            const auto r = field.reduce(coeff);
            if (r != 0) col.push_back({static_cast<std::uint32_t>(row), r});
        }
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        q.columns.push_back(std::move(col));
    }
    if (at != lines.size()) throw FormatError(lines[at].number, "trailing content after relations");

    for (std::size_t i = 0; i < m; ++i) q.generator_ids.push_back(static_cast<std::uint32_t>(i));
    for (std::size_t j = 0; j < mr; ++j) q.relation_ids.push_back(static_cast<std::uint32_t>(m + j));
    validate(q);
    return q;
}

Presentation read_presentation(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::string serialize_presentation(const Presentation& q) {
    std::ostringstream out;
    out << "fpres v1\n";
    out << "field " << q.prime << "\n";
    out << "generators " << q.generators.size() << "\n";
    for (const auto& g : q.generators) out << g.x << ' ' << g.y << "\n";
    out << "relations " << q.relations.size() << "\n";
    for (std::size_t j = 0; j < q.relations.size(); ++j) {
        out << q.relations[j].x << ' ' << q.relations[j].y << " ;";
        for (const auto& e : q.columns[j]) out << ' ' << e.row << ':' << e.coeff;
        out << "\n";
    }
    return out.str();
}

}  // namespace mdist
