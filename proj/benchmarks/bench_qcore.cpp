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

#include <vector>

#include "aam/qcore.hpp"

namespace {

void BM_Tensor(benchmark::State& state) {
  const aam::Index dim = aam::Index(1) << state.range(0);
  const aam::Matrix a = aam::random_unitary(dim, 1).matrix();
  const aam::Matrix b = aam::random_unitary(2, 2).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(aam::tensor(a, b));
}
BENCHMARK(BM_Tensor)->Arg(2)->Arg(4)->Arg(6);

void BM_Evolve(benchmark::State& state) {
  const aam::Index dim = aam::Index(1) << state.range(0);
  const aam::DensityMatrix rho = aam::random_density_matrix(dim, 3);
  const aam::UnitaryMatrix u = aam::random_unitary(dim, 4);
  for (auto _ : state) benchmark::DoNotOptimize(aam::evolve(rho, u));
}
BENCHMARK(BM_Evolve)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_PartialTrace(benchmark::State& state) {
  const int n = int(state.range(0));
  const aam::DensityMatrix rho =
      aam::random_density_matrix(aam::Index(1) << n, 5);
  const std::vector<int> keep{0};
  for (auto _ : state)
    benchmark::DoNotOptimize(aam::partial_trace(rho, keep));
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(4)->Arg(6);

void BM_RandomUnitary(benchmark::State& state) {
  const aam::Index dim = aam::Index(1) << state.range(0);
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(aam::random_unitary(dim, ++seed));
}
BENCHMARK(BM_RandomUnitary)->Arg(2)->Arg(4)->Arg(6);

void BM_ExpmHermitian(benchmark::State& state) {
  const aam::Index dim = aam::Index(1) << state.range(0);
  const aam::Matrix u = aam::random_unitary(dim, 6).matrix();
  const aam::Matrix h = (u + u.adjoint()) / 2.0;
  const aam::Complex scale(0.0, -1.0);
  for (auto _ : state) benchmark::DoNotOptimize(aam::expm(h, scale));
}
BENCHMARK(BM_ExpmHermitian)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
