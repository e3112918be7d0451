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

#include "aam/noise.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "aam/rng.hpp"

namespace aam {

namespace {

using M4 = Eigen::Matrix4cd;
using C = std::complex<double>;

constexpr double kFitFloor = 0.05;  // fit window: samples with mx above this
constexpr int kMinFitPoints = 4;
constexpr double kMinRate = 1e-9;   // 1/ms; below this the data is flat

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void validate(const NoiseConfig& cfg, const PulseSequence& seq) {
  require(cfg.gamma >= 0.0, "noise: gamma must be >= 0");
  require(cfg.kick_lo_deg <= cfg.kick_hi_deg, "noise: kick range inverted");
  require(cfg.total_time > 0.0, "noise: total_time must be positive");
  require(cfg.trajectories >= 1, "noise: need at least one trajectory");
  require(seq.cycle_time > 0.0, "noise: cycle_time must be positive");
  if (seq.kind != SequenceKind::none)
    require(seq.n_pulses >= 1, "noise: pulse sequence needs n_pulses >= 1");
  require(seq.pulse_axis == 'x' || seq.pulse_axis == 'y',
          "noise: pulse_axis must be 'x' or 'y'");
}

// Diagonal of H / pi in per-ms units, basis |system environment>.
struct FreePhases {
  double h[4];
  explicit FreePhases(const NoiseConfig& cfg) {
    const double ns = cfg.nu_s / 1000.0, ne = cfg.nu_e / 1000.0;
    const double jc = cfg.j_coupling / 1000.0 / 2.0;
    h[0] = M_PI * (ns + ne + jc);
    h[1] = M_PI * (ns - ne - jc);
    h[2] = M_PI * (-ns + ne - jc);
    h[3] = M_PI * (-ns - ne + jc);
  }
  // rho <- exp(-iH dt) rho exp(+iH dt); H diagonal so this is elementwise.
  void advance(M4& rho, double dt) const {
    if (dt == 0.0) return;
    C ph[4];
    for (int i = 0; i < 4; ++i) ph[i] = std::exp(C(0.0, -h[i] * dt));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) rho(i, j) *= ph[i] * std::conj(ph[j]);
  }
};

// Rotation about a transverse axis at azimuth phi.
Eigen::Matrix2cd transverse_rotation(double angle, double phi) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const C nx(std::cos(phi), 0.0), ny(std::sin(phi), 0.0);
  Eigen::Matrix2cd r;
  r << C(c, 0.0), C(0.0, -1.0) * s * (nx - C(0.0, 1.0) * ny),
      C(0.0, -1.0) * s * (nx + C(0.0, 1.0) * ny), C(c, 0.0);
  return r;
}

void apply_environment_kick(M4& rho, const Eigen::Matrix2cd& r) {
  M4 k = M4::Zero();
  k.block<2, 2>(0, 0) = r;
  k.block<2, 2>(2, 2) = r;
  rho = (k * rho * k.adjoint()).eval();
}

void apply_system_pulse(M4& rho, char axis) {
  M4 p = M4::Zero();
  if (axis == 'x') {
    p.block<2, 2>(0, 2) = Eigen::Matrix2cd::Identity();
    p.block<2, 2>(2, 0) = Eigen::Matrix2cd::Identity();
  } else {
    p.block<2, 2>(0, 2) = -C(0.0, 1.0) * Eigen::Matrix2cd::Identity();
    p.block<2, 2>(2, 0) = C(0.0, 1.0) * Eigen::Matrix2cd::Identity();
  }
  rho = (p * rho * p.adjoint()).eval();
}

double mx_of(const M4& rho) {
  return 2.0 * (rho(0, 2) + rho(1, 3)).real();
}

struct TrajectoryResult {
  std::vector<double> mx;
  double trace_error = 0.0;
};

// One pure-kick realization, sampled at every cycle boundary.
TrajectoryResult run_trajectory(const NoiseConfig& cfg,
                                const PulseSequence& seq,
                                const std::vector<double>& offsets, int cycles,
                                std::uint64_t traj_index) {
  const FreePhases free(cfg);
  M4 rho = M4::Zero();
  for (int i = 0; i < 4; ++i) rho(i, i) = 0.25;
  rho(0, 2) = rho(2, 0) = rho(1, 3) = rho(3, 1) = 0.25;

  std::mt19937_64 eng = make_engine(mix_seed(cfg.seed, {traj_index}));
  std::uniform_real_distribution<double> angle_dist(
      cfg.kick_lo_deg * M_PI / 180.0, cfg.kick_hi_deg * M_PI / 180.0);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * M_PI);
  std::exponential_distribution<double> gap_dist(
      cfg.gamma > 0.0 ? cfg.gamma : 1.0);

  const bool kicking = cfg.gamma > 0.0;
  long kick_count = 0;  // regular timing: kick k at (k+1)/gamma
  double next_kick = std::numeric_limits<double>::infinity();
  if (kicking)
    next_kick = (cfg.kick_timing == KickTiming::regular)
                    ? 1.0 / cfg.gamma
                    : gap_dist(eng);

  // Every step is trace-preserving in exact arithmetic; rescaling after
  // each conjugation removes benign float drift, and the per-step drift
  // itself stays in trace_error so a broken propagator is still caught.
  double max_drift = 0.0;
  const auto renormalize = [&](M4& state) {
    const double tr = state.trace().real();
    max_drift = std::max({max_drift, std::abs(tr - 1.0),
                          std::abs(state.trace().imag())});
    state /= tr;
  };

  const auto fire_kick = [&](M4& state) {
    const double angle = angle_dist(eng);
    double phi = 0.0;
    if (cfg.kick_axis == KickAxis::y) phi = M_PI / 2.0;
    if (cfg.kick_axis == KickAxis::random_transverse) phi = phi_dist(eng);
    apply_environment_kick(state, transverse_rotation(angle, phi));
    renormalize(state);
  };

  TrajectoryResult out;
  out.mx.reserve(size_t(cycles) + 1);
  out.mx.push_back(mx_of(rho));
  double t = 0.0;
  for (int c = 0; c < cycles; ++c) {
    const double cycle_start = c * seq.cycle_time;
    const double cycle_end = (c + 1) * seq.cycle_time;
    // Kicks act on the environment and pulses on the system, so the two
    // commute; ties in time need no ordering rule.
    for (size_t pi = 0; pi <= offsets.size(); ++pi) {
      const double stop =
          (pi < offsets.size()) ? cycle_start + offsets[pi] : cycle_end;
      while (next_kick <= stop) {
        free.advance(rho, next_kick - t);
        t = next_kick;
        fire_kick(rho);
        ++kick_count;
        next_kick = (cfg.kick_timing == KickTiming::regular)
                        ? double(kick_count + 1) / cfg.gamma
                        : t + gap_dist(eng);
      }
      free.advance(rho, stop - t);
      t = stop;
      if (pi < offsets.size()) {
        apply_system_pulse(rho, seq.pulse_axis);
        renormalize(rho);
      }
    }
    out.mx.push_back(mx_of(rho));
  }
  out.trace_error = max_drift;
  return out;
}

struct LogFit {
  bool converged = false;
  double slope = 0.0;
  double rms_residual = 0.0;
  int window_end = 0;
};

LogFit fit_log_decay(const std::vector<double>& times,
                     const std::vector<double>& mx) {
  LogFit fit;
  size_t stop = 0;
  while (stop < mx.size() && mx[stop] > kFitFloor) ++stop;
  fit.window_end = int(stop);
  if (int(stop) < kMinFitPoints) return fit;
  double st = 0, sy = 0;
  for (size_t k = 0; k < stop; ++k) {
    st += times[k];
    sy += std::log(mx[k]);
  }
  const double tbar = st / double(stop), ybar = sy / double(stop);
  double sxx = 0, sxy = 0;
  for (size_t k = 0; k < stop; ++k) {
    const double dt = times[k] - tbar;
    sxx += dt * dt;
    sxy += dt * (std::log(mx[k]) - ybar);
  }
  if (sxx <= 0) return fit;
  fit.slope = sxy / sxx;
  double ss = 0;
  for (size_t k = 0; k < stop; ++k) {
    const double r =
        std::log(mx[k]) - (ybar + fit.slope * (times[k] - tbar));
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / double(stop));
  fit.converged = true;
  return fit;
}

}  // namespace

const char* kick_axis_name(KickAxis a) {
  switch (a) {
    case KickAxis::x: return "x";
    case KickAxis::y: return "y";
    case KickAxis::random_transverse: return "random-transverse";
  }
  throw std::invalid_argument("kick_axis_name: bad enum value");
}

KickAxis kick_axis_from_name(const std::string& name) {
  if (name == "x") return KickAxis::x;
  if (name == "y") return KickAxis::y;
  if (name == "random-transverse") return KickAxis::random_transverse;
  throw std::invalid_argument("unknown kick axis '" + name + "'");
}

const char* kick_timing_name(KickTiming t) {
  return t == KickTiming::regular ? "regular" : "poisson";
}

KickTiming kick_timing_from_name(const std::string& name) {
  if (name == "regular") return KickTiming::regular;
  if (name == "poisson") return KickTiming::poisson;
  throw std::invalid_argument("unknown kick timing '" + name + "'");
}

const char* sequence_kind_name(SequenceKind k) {
  switch (k) {
    case SequenceKind::none: return "none";
    case SequenceKind::cpmg: return "cpmg";
    case SequenceKind::udd: return "udd";
  }
  throw std::invalid_argument("sequence_kind_name: bad enum value");
}

SequenceKind sequence_kind_from_name(const std::string& name) {
  if (name == "none") return SequenceKind::none;
  if (name == "cpmg") return SequenceKind::cpmg;
  if (name == "udd") return SequenceKind::udd;
  throw std::invalid_argument("unknown sequence kind '" + name + "'");
}

std::vector<double> pulse_offsets(const PulseSequence& seq) {
  require(seq.cycle_time > 0.0, "pulse_offsets: cycle_time must be positive");
  std::vector<double> t;
  if (seq.kind == SequenceKind::none) return t;
  require(seq.n_pulses >= 1, "pulse_offsets: n_pulses must be >= 1");
  const int n = seq.n_pulses;
  t.reserve(size_t(n));
  for (int j = 1; j <= n; ++j) {
    if (seq.kind == SequenceKind::cpmg)
      t.push_back((j - 0.5) * seq.cycle_time / n);
    else {
      const double s = std::sin(M_PI * j / (2.0 * (n + 1)));
      t.push_back(seq.cycle_time * s * s);
    }
  }
  return t;
}

DecayRecord simulate_decay(const NoiseConfig& cfg, const PulseSequence& seq,
                           int threads) {
  validate(cfg, seq);
  require(threads >= 1, "simulate_decay: threads must be >= 1");
  const std::vector<double> offsets = pulse_offsets(seq);
  const int cycles = int(cfg.total_time / seq.cycle_time + 1e-9);
  require(cycles >= 1, "simulate_decay: total_time shorter than one cycle");

  const int nt = cfg.trajectories;
  std::vector<TrajectoryResult> results(static_cast<size_t>(nt));
  const int workers = std::min(threads, nt);
  const auto run_range = [&](int begin, int end) {
    for (int i = begin; i < end; ++i)
      results[size_t(i)] =
          run_trajectory(cfg, seq, offsets, cycles, std::uint64_t(i));
  };
  if (workers == 1) {
    run_range(0, nt);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(size_t(workers));
    for (int w = 0; w < workers; ++w) {
      const int begin = nt * w / workers;
      const int end = nt * (w + 1) / workers;
      pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }

  DecayRecord rec;
  rec.times.resize(size_t(cycles) + 1);
  for (int c = 0; c <= cycles; ++c) rec.times[size_t(c)] = c * seq.cycle_time;
  rec.mx.assign(size_t(cycles) + 1, 0.0);
  // Fixed-order reduction: the sum must not depend on thread scheduling.
  for (int i = 0; i < nt; ++i) {
    if (results[size_t(i)].trace_error > 1e-12)
      throw std::runtime_error("simulate_decay: trajectory norm drift");
    for (size_t k = 0; k < rec.mx.size(); ++k)
      rec.mx[k] += results[size_t(i)].mx[k];
  }
  for (double& v : rec.mx) v /= double(nt);

  const LogFit fit = fit_log_decay(rec.times, rec.mx);
  rec.fit_converged = fit.converged;
  rec.fit_window = {0, fit.window_end};
  if (fit.converged) {
    rec.decay_rate = -fit.slope;
    rec.fit_residual = fit.rms_residual;
    if (rec.decay_rate > kMinRate) rec.t2_fit = 1.0 / rec.decay_rate;
  }
  return rec;
}

std::vector<GammaScanRow> t2_vs_gamma(const NoiseConfig& cfg,
                                      const std::vector<double>& gammas,
                                      const PulseSequence& seq, int threads) {
  std::vector<GammaScanRow> rows;
  rows.reserve(gammas.size());
  for (double g : gammas) {
    NoiseConfig c = cfg;
    c.gamma = g;
    const DecayRecord rec = simulate_decay(c, seq, threads);
    rows.push_back({g, rec.t2_fit, rec.decay_rate});
  }
  return rows;
}

NoiseSpectrum noise_spectrum(const NoiseConfig& cfg,
                             const std::vector<double>& taus, int threads) {
  NoiseSpectrum spec;
  for (double tau : taus) {
    require(tau > 0.0, "noise_spectrum: tau must be positive");
    PulseSequence seq;
    seq.kind = SequenceKind::cpmg;
    seq.n_pulses = 1;
    seq.cycle_time = tau;
    if (cfg.total_time / tau < kMinFitPoints) {
      spec.failed_taus.push_back(tau);
      continue;
    }
    const DecayRecord rec = simulate_decay(cfg, seq, threads);
    if (!rec.fit_converged) {
      spec.failed_taus.push_back(tau);
      continue;
    }
    spec.omegas.push_back(M_PI / tau);
    spec.s_values.push_back(
        rec.decay_rate > kMinRate ? M_PI * M_PI / 4.0 * rec.decay_rate : 0.0);
  }
  return spec;
}

}  // namespace aam
