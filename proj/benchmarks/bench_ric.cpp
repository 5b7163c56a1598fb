#include <benchmark/benchmark.h>

#include "ric/engine.hpp"
#include "ric/fold.hpp"
#include "ric/io.hpp"
#include "ric/ric.hpp"

namespace {

// Args: {log2 N, log2 C}
void BM_RicDft(benchmark::State& state) {
    const auto plan = ric::plan_from_exponents(static_cast<unsigned>(state.range(0)),
                                               static_cast<unsigned>(state.range(1)));
    const auto x = ric::random_signal(plan.n(), 1);
    ric::OpCounter counter;
    for (auto _ : state) {
        counter.reset();
        auto spectrum = ric::ric_dft(x, plan, ric::Normalization::None, counter);
        benchmark::DoNotOptimize(spectrum);
    }
    state.counters["complex_mults"] = static_cast<double>(counter.complex_mults);
    state.counters["complex_adds"] = static_cast<double>(counter.complex_adds);
}
BENCHMARK(BM_RicDft)->ArgsProduct({{10, 14, 18}, {2, 5, 8}})->Unit(benchmark::kMicrosecond);

void BM_Fold(benchmark::State& state) {
    const auto plan = ric::plan_from_exponents(static_cast<unsigned>(state.range(0)),
                                               static_cast<unsigned>(state.range(1)));
    const auto x = ric::random_signal(plan.n(), 2);
    for (auto _ : state) {
        auto folded = ric::fold(x, plan);
        benchmark::DoNotOptimize(folded);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.n()));
}
BENCHMARK(BM_Fold)->ArgsProduct({{10, 14, 18}, {2, 8}})->Unit(benchmark::kMicrosecond);

void BM_FullFft(benchmark::State& state) {
    const std::size_t n = std::size_t{1} << state.range(0);
    const auto x = ric::random_signal(n, 3);
    ric::OpCounter counter;
    for (auto _ : state) {
        counter.reset();
        auto spectrum = ric::fft_radix2(x, ric::Direction::Forward, ric::Normalization::None, counter);
        benchmark::DoNotOptimize(spectrum);
    }
    state.counters["complex_mults"] = static_cast<double>(counter.complex_mults);
    state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_FullFft)->DenseRange(10, 18, 4)->Unit(benchmark::kMicrosecond)->Complexity(benchmark::oNLogN);

void BM_DirectDft(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto x = ric::random_signal(n, 4);
    for (auto _ : state) {
        auto spectrum = ric::dft_direct(x, ric::Direction::Forward, ric::Normalization::None);
        benchmark::DoNotOptimize(spectrum);
    }
}
BENCHMARK(BM_DirectDft)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
