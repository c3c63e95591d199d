#include <benchmark/benchmark.h>

#include "../tests/support/instances.hpp"
#include "mdist/candidates.hpp"
#include "mdist/decision.hpp"
#include "mdist/oracle.hpp"

using namespace mdist;

namespace {

std::vector<Grade> grades_of_size(std::size_t total) {
    testing::Rng rng(42);
    const auto q = testing::random_presentation_total(rng, total);
    const auto q2 = testing::random_presentation_total(rng, total);
    return element_grades(q, q2);
}

void plane_vertices(benchmark::State& state, bool threaded) {
    const auto grades = grades_of_size(static_cast<std::size_t>(state.range(0)));
    const auto planes = build_planes(grades);
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& p = planes[k++ % planes.size()];
        benchmark::DoNotOptimize(threaded ? vertices_on_plane(p, planes) : vertices_on_plane_serial(p, planes));
    }
    state.counters["planes"] = static_cast<double>(planes.size());
}

void triple_levels(benchmark::State& state, bool threaded) {
    const auto grades = grades_of_size(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(threaded ? oracle::naive_vertex_levels(grades)
                                          : oracle::naive_vertex_levels_serial(grades));
}

void BM_VerticesOnPlane(benchmark::State& s) { plane_vertices(s, true); }
void BM_VerticesOnPlaneSerial(benchmark::State& s) { plane_vertices(s, false); }
void BM_TripleLevels(benchmark::State& s) { triple_levels(s, true); }
void BM_TripleLevelsSerial(benchmark::State& s) { triple_levels(s, false); }

}  // namespace

BENCHMARK(BM_VerticesOnPlane)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_VerticesOnPlaneSerial)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_TripleLevels)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TripleLevelsSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
