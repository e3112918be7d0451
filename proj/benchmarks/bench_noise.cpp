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

#include "aam/noise.hpp"
#include "aam/noninvasive.hpp"
#include "aam/oscillator.hpp"

namespace {

aam::NoiseConfig kicked_config(double gamma) {
  aam::NoiseConfig cfg;
  cfg.gamma = gamma;
  cfg.kick_hi_deg = 20.0;
  cfg.kick_axis = aam::KickAxis::random_transverse;
  cfg.total_time = 10.0;
  cfg.trajectories = 16;
  return cfg;
}

void BM_SimulateDecay(benchmark::State& state) {
  const aam::NoiseConfig cfg = kicked_config(double(state.range(0)));
  const aam::PulseSequence seq{aam::SequenceKind::cpmg, 1, 1.0, 'x'};
  for (auto _ : state)
    benchmark::DoNotOptimize(aam::simulate_decay(cfg, seq, 1));
}
BENCHMARK(BM_SimulateDecay)->Arg(25)->Arg(100)->Arg(400);

void BM_SimulateDecayThreaded(benchmark::State& state) {
  const aam::NoiseConfig cfg = kicked_config(100.0);
  const aam::PulseSequence seq{aam::SequenceKind::cpmg, 1, 1.0, 'x'};
  const int threads = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(aam::simulate_decay(cfg, seq, threads));
}
BENCHMARK(BM_SimulateDecayThreaded)->Arg(1)->Arg(2)->Arg(4);

void BM_ElgiDeficit(benchmark::State& state) {
  aam::ElgiConfig cfg;
  cfg.theta = M_PI / 4.0;
  for (auto _ : state) benchmark::DoNotOptimize(aam::elgi_deficit(cfg));
}
BENCHMARK(BM_ElgiDeficit);

void BM_ContextualityI(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        aam::contextuality_I(0, -M_PI / 4.0, -3.0 * M_PI / 4.0));
}
BENCHMARK(BM_ContextualityI);

void BM_FcfCircuit(benchmark::State& state) {
  const aam::TruncatedOscillator osc = aam::make_oscillator(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(aam::fcf(osc, 1, 0, 1.5, aam::FcfRoute::circuit));
}
BENCHMARK(BM_FcfCircuit);

}  // namespace

BENCHMARK_MAIN();
