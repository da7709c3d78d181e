#include <benchmark/benchmark.h>

#include "radwave/assumptions.hpp"
#include "radwave/blowup.hpp"
#include "radwave/freewave.hpp"
#include "radwave/region.hpp"
#include "radwave/verify.hpp"

namespace {

using namespace radwave;

void BM_u0_odd(benchmark::State& state) {
    const RadialProfile data = gaussian_profile(1.0, 6.0, 1.0, 0.5);
    const QuadratureSpec q{static_cast<int>(state.range(0)), 128, 128, QuadRule::GaussLegendre};
    for (auto _ : state) benchmark::DoNotOptimize(u0_odd_value(data, 2, 7.0, 2.0, q));
}
BENCHMARK(BM_u0_odd)->Arg(64)->Arg(256)->Arg(1024);

void BM_u0_even(benchmark::State& state) {
    const RadialProfile data = gaussian_profile(1.0, 6.0, 1.0, 0.5);
    const int k = static_cast<int>(state.range(0));
    const QuadratureSpec q{256, k, k, QuadRule::GaussLegendre};
    for (auto _ : state) benchmark::DoNotOptimize(u0_even_value(data, 2, 7.0, 2.0, q));
}
BENCHMARK(BM_u0_even)->Arg(16)->Arg(64)->Arg(128);

void BM_kernel_sweep(benchmark::State& state) {
    const RegionGrid grid = make_sigma1_grid(sigma1_region(4, 1.0), 8, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            verify_kernel_inequality(2, unit_weight(), grid, 32, 1e-10, false));
    }
}
BENCHMARK(BM_kernel_sweep)->Unit(benchmark::kMillisecond);

void BM_duhamel_apply(benchmark::State& state) {
    const int levels = static_cast<int>(state.range(0));
    const IterationState s0 = make_state(5, 1.0, 0.25, 1000.0, 300.0, levels);
    const Nonlinearity F = Nonlinearity::power(1.0, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(duhamel_apply_high(s0, 2, F));
}
BENCHMARK(BM_duhamel_apply)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
