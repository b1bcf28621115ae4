// Parallel against serial sweep kernels on the same exhaustive sweeps.

#include "absorb/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace absorb;

namespace {

constexpr std::uint64_t kCap = std::uint64_t{1} << 22;

void basic_sweep(benchmark::State& state, bool parallel) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sweep::verify_basic(3, n, kCap, parallel).failureCount);
}

void improved_sweep(benchmark::State& state, bool parallel) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sweep::verify_improved(3, n, n, kCap, parallel).failureCount);
}

void multi_sweep(benchmark::State& state, bool parallel) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sweep::verify_multi(3, n, 2, kCap, parallel).failureCount);
}

} // namespace

BENCHMARK_CAPTURE(basic_sweep, serial, false)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(basic_sweep, parallel, true)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(improved_sweep, serial, false)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(improved_sweep, parallel, true)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(multi_sweep, serial, false)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(multi_sweep, parallel, true)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
