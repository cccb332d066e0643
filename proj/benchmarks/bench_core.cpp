// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <benchmark/benchmark.h>

#include "tflab/accspec.hpp"
#include "tflab/locop.hpp"
#include "tflab/tfa.hpp"

namespace {

using namespace tflab;

void BM_Stft(benchmark::State& state) {
  const PhaseGrid grid = make_grid(static_cast<std::size_t>(state.range(0)));
  const Window g = gaussian_window(grid);
  const Signal f = hermite_signal(grid, 3);
  for (auto _ : state) benchmark::DoNotOptimize(stft(f, g));
}
BENCHMARK(BM_Stft)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Apply(benchmark::State& state) {
  const PhaseGrid grid = make_grid(static_cast<std::size_t>(state.range(0)));
  const LocOperator op(gaussian_window(grid), disk_mask(grid, {0.0, 0.0}, 4.0));
  const Signal f = hermite_signal(grid, 5);
  for (auto _ : state) benchmark::DoNotOptimize(apply(op, f));
}
BENCHMARK(BM_Apply)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_AssembleCompressed(benchmark::State& state) {
  const PhaseGrid grid = make_grid(4096);
  const LocOperator op(gaussian_window(grid), disk_mask(grid, {0.0, 0.0}, static_cast<double>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_compressed(op));
}
BENCHMARK(BM_AssembleCompressed)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Eigh(benchmark::State& state) {
  const PhaseGrid grid = make_grid(4096);
  const DomainMask disk = disk_mask(grid, {0.0, 0.0}, static_cast<double>(state.range(0)));
  const LocOperator op(gaussian_window(grid), disk);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(op, a_omega(disk)));
}
BENCHMARK(BM_Eigh)->Arg(2)->Arg(4)->Unit(benchmark::kSecond)->Iterations(1);

void BM_TraceSquare(benchmark::State& state) {
  const PhaseGrid grid = make_grid(static_cast<std::size_t>(state.range(0)));
  const LocOperator op(gaussian_window(grid), disk_mask(grid, {0.0, 0.0}, 2.0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_square_ambiguity(op));
}
BENCHMARK(BM_TraceSquare)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
