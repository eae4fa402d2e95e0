// Serial reference kernels against their OpenMP counterparts.

#include "llv/repcalc.hpp"
#include "llv/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace llv;

// V_(2,1,1,1,0,...) over so(b2+2); large enough that orbit enumeration dominates.
WeightSystem bench_module(std::int64_t b2) {
  const RootSystem rs = build_root_system(b2);
  Coords2 c(rs.rank(), 0);
  c[0] = 4;
  c[1] = 2;
  c[2] = 2;
  c[3] = 2;
  return freudenthal(rs, Weight(c));
}

void BM_GradedProfileSerial(benchmark::State& state) {
  const RootSystem rs = build_root_system(state.range(0));
  const WeightSystem ws = bench_module(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_profile_serial(rs, ws));
}

void BM_GradedProfileParallel(benchmark::State& state) {
  const RootSystem rs = build_root_system(state.range(0));
  const WeightSystem ws = bench_module(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_profile(rs, ws));
}

VerifyGrid bench_grid(std::int64_t b2_max) {
  VerifyGrid g;
  g.b2_min = 3;
  g.b2_max = b2_max;
  g.sum_max = 3;
  return g;
}

void BM_VerifyGridSerial(benchmark::State& state) {
  const VerifyGrid g = bench_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_grid_serial(g));
}

void BM_VerifyGridParallel(benchmark::State& state) {
  const VerifyGrid g = bench_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_grid(g));
}

}  // namespace

BENCHMARK(BM_GradedProfileSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GradedProfileParallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyGridSerial)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyGridParallel)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
