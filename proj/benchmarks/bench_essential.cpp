#include <benchmark/benchmark.h>

#include "essbasis/essential.hpp"

using namespace essbasis;

static void BM_EssentialDirectAdjointA2(benchmark::State& state) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build('A', 2));
    auto cb = ChevalleyBasis::build(rs);
    auto [seq, order] = seq_fflv(*rs);
    EssentialEngine engine(cb, seq, order);
    for (auto _ : state) {
        auto es = engine.essential_direct({1, 1});
        benchmark::DoNotOptimize(es.exponents.size());
    }
}
BENCHMARK(BM_EssentialDirectAdjointA2);

static void BM_ComputeBasisB2(benchmark::State& state) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build('B', 2));
    auto cb = ChevalleyBasis::build(rs);
    for (auto _ : state) {
        auto [seq, order] = seq_fflv(*rs);
        EssentialEngine engine(cb, seq, order);
        benchmark::DoNotOptimize(engine.compute_basis({2, 2}).dimension.get_ui());
    }
}
BENCHMARK(BM_ComputeBasisB2);

static void BM_MinkowskiSum(benchmark::State& state) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build('A', 3));
    auto cb = ChevalleyBasis::build(rs);
    auto [seq, order] = seq_fflv(*rs);
    EssentialEngine engine(cb, seq, order);
    const auto& a = engine.compute_basis({1, 1, 0}).exponents;
    const auto& b = engine.compute_basis({0, 1, 1}).exponents;
    std::set<IVec> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    for (auto _ : state) {
        auto s = minkowski_sum(sa, sb);
        benchmark::DoNotOptimize(s.size());
    }
}
BENCHMARK(BM_MinkowskiSum);
