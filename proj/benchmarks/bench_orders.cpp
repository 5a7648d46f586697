#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "essbasis/orders.hpp"

using namespace essbasis;

namespace {

std::vector<IVec> random_exponents(std::size_t count, std::size_t len) {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> d(0, 6);
    std::vector<IVec> out(count, IVec(len));
    for (auto& v : out)
        for (auto& x : v) x = d(rng);
    return out;
}

void BM_OrderCompare(benchmark::State& state, OrderKind kind) {
    auto vecs = random_exponents(256, static_cast<std::size_t>(state.range(0)));
    MonomialOrder order{kind, {}};
    if (kind == OrderKind::wdegrevlex)
        order.weights.assign(static_cast<std::size_t>(state.range(0)), 2);
    std::size_t i = 0;
    for (auto _ : state) {
        const IVec& a = vecs[i % vecs.size()];
        const IVec& b = vecs[(i * 7 + 1) % vecs.size()];
        benchmark::DoNotOptimize(order.compare(a, b));
        ++i;
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_OrderCompare, lex, OrderKind::lex)->Arg(6)->Arg(36);
BENCHMARK_CAPTURE(BM_OrderCompare, degrevlex, OrderKind::degrevlex)->Arg(6)->Arg(36);
BENCHMARK_CAPTURE(BM_OrderCompare, wdegrevlex, OrderKind::wdegrevlex)->Arg(6)->Arg(36);
