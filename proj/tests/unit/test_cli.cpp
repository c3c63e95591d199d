#include <doctest.h>

#include <sstream>

#include "../support/fixtures.hpp"
#include "../support/instances.hpp"
#include "mdist/cli.hpp"
#include "mdist/fpres.hpp"

using namespace mdist;

namespace {

std::string fixture(const char* name) { return std::string(MDIST_FIXTURES) + "/" + name; }

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(RunConfig c) {
    std::ostringstream out, err;
    const int status = run(c, out, err);
    return {status, out.str(), err.str()};
}

RunConfig pair(Command cmd, const char* a, const char* b) {
    RunConfig c;
    c.command = cmd;
    c.first = fixture(a);
    c.second = fixture(b);
    return c;
}

}  // namespace

TEST_CASE("decide exit codes") {
    auto c = pair(Command::decide, "fig1.fpres", "fig1.fpres");
    c.lambda = "0";
    auto r = invoke(c);
    CHECK(r.status == 0);
    CHECK(r.out == "yes\n");

    c = pair(Command::decide, "point00.fpres", "point11.fpres");
    c.lambda = "99/100";
    r = invoke(c);
    CHECK(r.status == 1);
    CHECK(r.out == "no\n");
    c.lambda = "1";
    CHECK(invoke(c).status == 0);
    c.lambda = "-1";
    CHECK(invoke(c).status == 2);
    c.lambda = "one";
    CHECK(invoke(c).status == 2);
}

TEST_CASE("compute prints the exact value and seed, reproducibly") {
    auto c = pair(Command::compute, "point00.fpres", "point11.fpres");
    auto r = invoke(c);
    CHECK(r.status == 0);
    CHECK(r.out == "1\nseed 1\n");
    c = pair(Command::compute, "fig1.fpres", "point11.fpres");
    c.seed = 77;
    const auto first = invoke(c);
    CHECK(first.status == 0);
    CHECK(first.out == invoke(c).out);
    CHECK(first.out.find("seed 77\n") != std::string::npos);
    c = pair(Command::compute, "point00.fpres", "zero.fpres");
    CHECK(invoke(c).out == "inf\nseed 1\n");
    c = pair(Command::compute, "point00.fpres", "point11.fpres");
    c.decimal_digits = 3;
    CHECK(invoke(c).out == "1.000 (approximate)\nseed 1\n");
}

TEST_CASE("bottleneck at a slice") {
    auto c = pair(Command::bottleneck, "fig1.fpres", "fig1.fpres");
    c.slice = "1,0";
    auto r = invoke(c);
    CHECK(r.status == 0);
    CHECK(r.out == "0\n");
    c = pair(Command::bottleneck, "point00.fpres", "point11.fpres");
    c.slice = "1/2,1";
    CHECK(invoke(c).out == "1/2\n");
    for (const char* bad : {"0,1", "3/2,0", "1", "1,2,3"}) {
        c.slice = bad;
        CHECK(invoke(c).status == 2);
    }
}

TEST_CASE("sample prints the bound and a TSV block per side") {
    auto c = pair(Command::sample, "point00.fpres", "point11.fpres");
    c.grid_a = 2;
    c.grid_b = 3;
    c.brange = "-1,1";
    const auto r = invoke(c);
    CHECK(r.status == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "lower_bound 1");
    std::size_t rows = 0;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#' && line != "a\tb\td_B") ++rows;
    CHECK(rows == 12);
    CHECK(r.out.find("1/2\t1\t1/2\n") != std::string::npos);
    CHECK(parse_grid("50x40") == std::pair<std::size_t, std::size_t>{50, 40});
    CHECK_THROWS(parse_grid("50"));
    CHECK_THROWS(parse_grid("0x3"));
}

TEST_CASE("errors go to stderr with status 2") {
    RunConfig c;
    c.command = Command::validate;
    for (const char* bad : {"bad_syntax.fpres", "bad_grade.fpres", "missing.fpres"}) {
        c.first = fixture(bad);
        const auto r = invoke(c);
        CHECK(r.status == 2);
        CHECK(r.out.empty());
        CHECK(r.err.rfind("error: ", 0) == 0);
    }
    c.first = fixture("fig1.fpres");
    const auto ok = invoke(c);
    CHECK(ok.status == 0);
    CHECK(ok.out == "valid fpres v1: field 2, 2 generators, 1 relations\n");
    auto mixed = pair(Command::compute, "point00.fpres", "point00_f3.fpres");
    CHECK(invoke(mixed).status == 2);
}

TEST_CASE("fixture file matches the in-memory example") {
    CHECK(read_presentation(fixture("fig1.fpres")) == testing::fig1());
    CHECK(serialize_presentation(read_presentation(fixture("zero.fpres"))) ==
          "fpres v1\nfield 2\ngenerators 0\nrelations 0\n");
}
