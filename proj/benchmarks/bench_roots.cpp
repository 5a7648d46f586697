#include <benchmark/benchmark.h>

#include "essbasis/multiplicity.hpp"

using namespace essbasis;

static void BM_BuildRootSystem(benchmark::State& state) {
    for (auto _ : state) {
        auto rs = RootSystem::build('E', 8);
        benchmark::DoNotOptimize(rs.num_positive());
    }
}
BENCHMARK(BM_BuildRootSystem);

static void BM_WeylDimension(benchmark::State& state) {
    auto rs = RootSystem::build('A', 3);
    for (auto _ : state) benchmark::DoNotOptimize(weyl_dimension(rs, {6, 6, 6}));
}
BENCHMARK(BM_WeylDimension);

static void BM_Freudenthal(benchmark::State& state) {
    auto rs = RootSystem::build('A', 3);
    for (auto _ : state) {
        auto m = weight_multiplicities_by_delta(rs, {1, 3, 2});
        benchmark::DoNotOptimize(m.size());
    }
}
BENCHMARK(BM_Freudenthal);

BENCHMARK_MAIN();
