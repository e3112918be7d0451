// Copyright 2026 The aamsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "aam/qcore.hpp"
#include "aam/tomography.hpp"

namespace {

void BM_BuildPlan(benchmark::State& state) {
  const int n = int(state.range(0));
  const int n_hat = int(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(aam::build_plan(n, n_hat, 2026, 5));
}
BENCHMARK(BM_BuildPlan)->Args({1, 1})->Args({2, 1})->Args({2, 2})->Args({3, 2});

void BM_Acquire(benchmark::State& state) {
  const int n = int(state.range(0));
  const int n_hat = int(state.range(1));
  const aam::TomographyPlan plan = aam::build_plan(n, n_hat, 2026, 5);
  const aam::DensityMatrix rho =
      aam::random_density_matrix(aam::Index(1) << n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(aam::acquire(plan, rho));
}
BENCHMARK(BM_Acquire)->Args({2, 1})->Args({3, 2});

void BM_Reconstruct(benchmark::State& state) {
  const int n = int(state.range(0));
  const int n_hat = int(state.range(1));
  const aam::TomographyPlan plan = aam::build_plan(n, n_hat, 2026, 5);
  const aam::DensityMatrix rho =
      aam::random_density_matrix(aam::Index(1) << n, 7);
  const auto records = aam::acquire(plan, rho);
  for (auto _ : state)
    benchmark::DoNotOptimize(aam::reconstruct(plan, records));
}
BENCHMARK(BM_Reconstruct)->Args({2, 1})->Args({3, 2});

void BM_Sspt(benchmark::State& state) {
  const aam::ProcessMap process =
      aam::ProcessMap::from_unitary(aam::hadamard());
  for (auto _ : state)
    benchmark::DoNotOptimize(aam::sspt(process, 1, 1, 1, 0.0, 2026, 5));
}
BENCHMARK(BM_Sspt);

void BM_ChiFromProcess(benchmark::State& state) {
  const int n = int(state.range(0));
  aam::Matrix u = aam::identity(2);
  for (int q = 1; q < n; ++q) u = aam::tensor(u, aam::hadamard());
  const aam::ProcessMap process = aam::ProcessMap::from_unitary(u);
  for (auto _ : state)
    benchmark::DoNotOptimize(aam::chi_from_process(process, n));
}
BENCHMARK(BM_ChiFromProcess)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
