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

#include <memory>
#include <string>
#include <vector>

#include "aam/noise.hpp"
#include "common.hpp"

namespace aamcli {
namespace {

// Environment flags shared by the decay and spectroscopy runs.
struct EnvParams {
  double gamma = 0.0;
  double kick_lo = 0.0;
  double kick_hi = 0.0;
  std::string axis = "x";
  std::string timing = "regular";
  double j_coupling = 209.2;
  double nu_s = 0.0;
  double nu_e = 0.0;
  double total = 50.0;
  int trajectories = 200;
};

void bind_env(Command& cmd, EnvParams& env) {
  cmd.bind("--gamma", env.gamma, "environment kick rate (kicks/ms)");
  cmd.bind("--kick-lo", env.kick_lo, "kick-angle interval low edge (degrees)");
  cmd.bind("--kick-hi", env.kick_hi,
           "kick-angle interval high edge (degrees)");
  cmd.bind("--axis", env.axis,
           "kick rotation axis: x | y | random-transverse");
  cmd.bind("--timing", env.timing, "kick arrival process: regular | poisson");
  cmd.bind("--j", env.j_coupling, "system-environment coupling J (Hz)");
  cmd.bind("--nu-s", env.nu_s, "system offset frequency (Hz)");
  cmd.bind("--nu-e", env.nu_e, "environment offset frequency (Hz)");
  cmd.bind("--total", env.total, "total evolution time (ms)");
  cmd.bind("--trajectories", env.trajectories,
           "kick realizations averaged per curve (count)");
}

aam::NoiseConfig to_config(const EnvParams& env, std::uint64_t seed) {
  aam::NoiseConfig cfg;
  cfg.nu_s = env.nu_s;
  cfg.nu_e = env.nu_e;
  cfg.j_coupling = env.j_coupling;
  cfg.gamma = env.gamma;
  cfg.kick_lo_deg = env.kick_lo;
  cfg.kick_hi_deg = env.kick_hi;
  cfg.kick_axis = aam::kick_axis_from_name(env.axis);
  cfg.kick_timing = aam::kick_timing_from_name(env.timing);
  cfg.seed = seed;
  cfg.total_time = env.total;
  cfg.trajectories = env.trajectories;
  return cfg;
}

nlohmann::json fit_json(const aam::DecayRecord& rec) {
  return nlohmann::json{
      {"t2", rec.t2_fit ? nlohmann::json(*rec.t2_fit) : nlohmann::json()},
      {"rate", rec.decay_rate},
      {"converged", rec.fit_converged},
      {"residual", rec.fit_residual},
      {"fit_window", {rec.fit_window.first, rec.fit_window.second}}};
}

}  // namespace

void register_noise(CLI::App& app, Registry& reg) {
  struct Params {
    EnvParams env;
    std::string seq = "none";
    int n_pulses = 1;
    double tc = 1.0;
    std::string pulse_axis = "x";
  };
  auto p = std::make_shared<Params>();
  Command& cmd = reg.add(
      app, "noise",
      "Trajectory-averaged transverse decay of a spin coupled to a kicked "
      "environment, with optional pi-pulse refocusing");
  bind_env(cmd, p->env);
  cmd.bind("--seq", p->seq,
           "refocusing sequence on the system qubit: none | cpmg | udd");
  cmd.bind("--n-pulses", p->n_pulses, "pi pulses per cycle (count)");
  cmd.bind("--tc", p->tc, "refocusing cycle time (ms)");
  cmd.bind("--pulse-axis", p->pulse_axis, "pi-pulse axis: x | y");
  cmd.on_run([p, &reg](const Artifacts& art) {
    aam::PulseSequence seq;
    seq.kind = aam::sequence_kind_from_name(p->seq);
    seq.n_pulses = p->n_pulses;
    seq.cycle_time = p->tc;
    if (p->pulse_axis != "x" && p->pulse_axis != "y")
      throw std::invalid_argument("--pulse-axis must be x or y");
    seq.pulse_axis = p->pulse_axis[0];
    const aam::DecayRecord rec = aam::simulate_decay(
        to_config(p->env, reg.global.seed), seq, reg.global.threads);
    std::vector<std::string> rows(rec.times.size());
    for (size_t i = 0; i < rec.times.size(); ++i)
      rows[i] = fmt(rec.times[i]) + "," + fmt(rec.mx[i]);
    const nlohmann::json fit = fit_json(rec);
    art.csv({"fit: " + fit.dump()}, "t,Mx", rows);
    art.json_result(nlohmann::json{{"fit", fit}}, /*primary=*/false);
    art.recipe({"title: transverse decay under engineered noise",
                "file: " + art.csv_name(),
                "x: t [ms]", "y: Mx [dimensionless, log scale]",
                "series: t vs Mx"});
  });
}

void register_noise_spectrum(CLI::App& app, Registry& reg) {
  struct Params {
    EnvParams env;
    std::string tau_list = "0.5,1,2,4,8";
  };
  auto p = std::make_shared<Params>();
  Command& cmd = reg.add(
      app, "noise-spectrum",
      "Noise spectral density probed by single-pulse refocusing cycles of "
      "varying period");
  bind_env(cmd, p->env);
  cmd.bind("--tau-list", p->tau_list,
           "comma list of half-cycle periods tau (ms); each maps to "
           "omega = pi/tau");
  cmd.on_run([p, &reg](const Artifacts& art) {
    const aam::NoiseSpectrum spec =
        aam::noise_spectrum(to_config(p->env, reg.global.seed),
                            parse_list(p->tau_list), reg.global.threads);
    std::vector<std::string> rows(spec.omegas.size());
    for (size_t i = 0; i < spec.omegas.size(); ++i)
      rows[i] = fmt(spec.omegas[i]) + "," + fmt(spec.s_values[i]);
    const nlohmann::json failed(spec.failed_taus);
    art.csv({"failed_taus: " + failed.dump()}, "omega,S", rows);
    art.json_result(nlohmann::json{{"failed_taus", failed}},
                    /*primary=*/false);
    art.recipe({"title: probed noise spectral density",
                "file: " + art.csv_name(),
                "x: omega [rad/ms, log scale]",
                "y: S(omega) [1/ms, log scale]",
                "series: omega vs S"});
  });
}

}  // namespace aamcli
