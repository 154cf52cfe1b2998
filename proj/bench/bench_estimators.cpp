// Serial reference vs OpenMP execution of the Monte Carlo estimators.
// Both paths produce identical estimates; only wall-clock time differs.

#include <benchmark/benchmark.h>

#include "betasimplex/estimators.hpp"

using namespace betasimplex;

namespace {

McOptions options_for(Execution execution) {
    McOptions o;
    o.execution = execution;
    return o;
}

template <Execution E>
void BM_ProjectionD3(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mc_projection_simplex_prob(3, BetaParam(0.0), n, options_for(E)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <Execution E>
void BM_ProjectionD4(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mc_projection_simplex_prob(4, BetaParam(0.0), n, options_for(E)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <Execution E>
void BM_DirectD3(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mc_angle_sum_direct(3, BetaParam(-1.0), n, 0, options_for(E)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <Execution E>
void BM_DirectD4(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mc_angle_sum_direct(4, BetaParam(-1.0), n, 16, options_for(E)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <Execution E>
void BM_FacetsD3(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const PolytopeSpec spec{12, 3, BetaParam(0.0)};
    for (auto _ : state) benchmark::DoNotOptimize(mc_facet_count(spec, n, options_for(E)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

}  // namespace

BENCHMARK(BM_ProjectionD3<Execution::Serial>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProjectionD3<Execution::Parallel>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProjectionD4<Execution::Serial>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProjectionD4<Execution::Parallel>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectD3<Execution::Serial>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectD3<Execution::Parallel>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectD4<Execution::Serial>)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectD4<Execution::Parallel>)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FacetsD3<Execution::Serial>)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FacetsD3<Execution::Parallel>)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
