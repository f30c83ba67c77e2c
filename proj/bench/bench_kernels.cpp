// Serial reference paths against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <vector>

#include "nonsplit/biquad.hpp"
#include "nonsplit/char_oracle.hpp"
#include "nonsplit/cubic.hpp"
#include "nonsplit/kernels.hpp"
#include "nonsplit/profiles.hpp"
#include "nonsplit/sigma.hpp"

using namespace nonsplit;

static void BM_MemorySum(benchmark::State& state, bool parallel) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> s(n + 1), p(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    s[i] = 1.0 / (1.0 + double(i));
    p[i] = i % 7 == 0 ? -1.0 : 1.0;
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel ? memory_sum_parallel(s.data(), p.data(), n)
                                      : memory_sum_serial(s.data(), p.data(), n));
}
BENCHMARK_CAPTURE(BM_MemorySum, serial, false)->Arg(10000)->Arg(100000);
BENCHMARK_CAPTURE(BM_MemorySum, parallel, true)->Arg(10000)->Arg(100000);

static void BM_Convolution(benchmark::State& state, Exec exec) {
  auto p = extremal_profile(2.0, 8.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_convolution(p, 2.0, 8.0, 1e-3, exec).values.back());
}
BENCHMARK_CAPTURE(BM_Convolution, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Convolution, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);

static void BM_DeltaSweep(benchmark::State& state, Exec exec) {
  IncExcConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(biquad_sweep(cfg, 0.005, 0.1, exec).worst_delta);
}
BENCHMARK_CAPTURE(BM_DeltaSweep, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DeltaSweep, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);

static void BM_CubicScan(benchmark::State& state, Exec exec) {
  IncExcConfig cfg;
  cfg.quad_tolerance = 1e-6;
  for (auto _ : state) benchmark::DoNotOptimize(cubic_critical_A(cfg, 2, 4.5, 0.05, 1e-3, exec).A_star);
}
BENCHMARK_CAPTURE(BM_CubicScan, serial, Exec::serial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_CAPTURE(BM_CubicScan, parallel, Exec::parallel)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_CharScan(benchmark::State& state, Exec exec) {
  for (auto _ : state) benchmark::DoNotOptimize(scan(3, 200000, ScanMode::quadratic, ScanFilter::all, exec).rows.size());
}
BENCHMARK_CAPTURE(BM_CharScan, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharScan, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
