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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aam {

enum class KickAxis { x, y, random_transverse };
enum class KickTiming { regular, poisson };
enum class SequenceKind { none, cpmg, udd };

const char* kick_axis_name(KickAxis a);
KickAxis kick_axis_from_name(const std::string& name);
const char* kick_timing_name(KickTiming t);
KickTiming kick_timing_from_name(const std::string& name);
const char* sequence_kind_name(SequenceKind k);
SequenceKind sequence_kind_from_name(const std::string& name);

// Two-spin system/environment pair evolving under
// H = pi (nu_s sz_s + nu_e sz_e + (J/2) sz_s sz_e), with random small
// rotations ("kicks") on the environment qubit.  Frequencies in Hz, times
// in ms.
struct NoiseConfig {
  double nu_s = 0.0;           // system offset, Hz
  double nu_e = 0.0;           // environment offset, Hz
  double j_coupling = 209.2;   // Hz
  double gamma = 0.0;          // kicks per ms
  double kick_lo_deg = 0.0;    // kick-angle interval, degrees
  double kick_hi_deg = 0.0;
  KickAxis kick_axis = KickAxis::x;
  KickTiming kick_timing = KickTiming::regular;
  std::uint64_t seed = 1;
  double total_time = 50.0;    // ms
  int trajectories = 200;
};

// pi pulses on the system qubit, repeated every cycle_time.
struct PulseSequence {
  SequenceKind kind = SequenceKind::none;
  int n_pulses = 0;        // per cycle
  double cycle_time = 1.0; // ms
  char pulse_axis = 'x';   // 'x' or 'y'
};

// Pulse instants within one cycle, strictly inside (0, cycle_time).
// CPMG: t_j = (j - 1/2) tc / N.  UDD: t_j = tc sin^2(pi j / (2(N+1))).
std::vector<double> pulse_offsets(const PulseSequence& seq);

struct DecayRecord {
  std::vector<double> times;  // ms, cycle boundaries starting at 0
  std::vector<double> mx;     // trajectory-averaged <sx> of the system
  bool fit_converged = false;
  std::optional<double> t2_fit;     // ms; absent unless a positive decay rate
  double decay_rate = 0.0;          // 1/ms, minus the log-fit slope
  std::pair<int, int> fit_window{0, 0};  // [begin, end) sample indices
  double fit_residual = 0.0;        // RMS of log-fit residuals
};

// Trajectory-averaged transverse decay.  Each trajectory is a pure unitary
// run with its own kick realization; averaging over `trajectories` produces
// the decoherence.  Deterministic in (cfg, seq) regardless of `threads`.
DecayRecord simulate_decay(const NoiseConfig& cfg, const PulseSequence& seq,
                           int threads = 1);

struct GammaScanRow {
  double gamma = 0.0;
  std::optional<double> t2 = std::nullopt;  // ms
  double rate = 0.0;                        // 1/ms
};

// Decay-rate scan over kick rates; all rows share cfg's seed so the kick
// angle draws are common random numbers.
std::vector<GammaScanRow> t2_vs_gamma(const NoiseConfig& cfg,
                                      const std::vector<double>& gammas,
                                      const PulseSequence& seq,
                                      int threads = 1);

struct NoiseSpectrum {
  std::vector<double> omegas;    // rad/ms, pi / tau
  std::vector<double> s_values;  // S(omega) = pi^2 / (4 T2), never negative
  std::vector<double> failed_taus;  // entries with a non-convergent fit
};

// CPMG filter-scan spectroscopy: one single-pulse CPMG run per tau.
NoiseSpectrum noise_spectrum(const NoiseConfig& cfg,
                             const std::vector<double>& taus,
                             int threads = 1);

}  // namespace aam
