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

#include <cmath>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "aam/rng.hpp"
#include "aam/tomography.hpp"
#include "common.hpp"
#include "json_util.hpp"

namespace aamcli {
namespace {

// "identity | notx | noty | hadamard | phase(theta)" or a Kraus JSON file
// {"n": qubits, "kraus": [matrix, ...]}.
aam::ProcessMap make_process(const std::string& spec, int& n_out) {
  using aam::Matrix;
  n_out = 1;
  if (spec == "identity") return aam::ProcessMap::from_unitary(aam::identity(2));
  if (spec == "notx") return aam::ProcessMap::from_unitary(aam::pauli_x());
  if (spec == "noty") return aam::ProcessMap::from_unitary(aam::pauli_y());
  if (spec == "hadamard")
    return aam::ProcessMap::from_unitary(aam::hadamard());
  if (spec.rfind("phase(", 0) == 0 && spec.back() == ')') {
    const double theta = parse_angle(spec.substr(6, spec.size() - 7));
    Matrix u = Matrix::Identity(2, 2);
    u(1, 1) = std::exp(std::complex<double>(0.0, theta));
    return aam::ProcessMap::from_unitary(u);
  }
  const nlohmann::json j = aam::detail::parse_json(read_file(spec), spec);
  return aam::detail::decode_json(spec, [&j, &n_out] {
    n_out = j.at("n").get<int>();
    std::vector<Matrix> ks;
    for (const auto& k : j.at("kraus"))
      ks.push_back(aam::detail::matrix_from_json(k));
    return aam::ProcessMap::from_kraus(std::move(ks));
  });
}

}  // namespace

void register_aaqst(CLI::App& app, Registry& reg) {
  struct Params {
    int n = 3;
    int ancilla = 2;
    int draws = 20;
    double noise = 0.0;
    std::string state = "random";
  };
  auto p = std::make_shared<Params>();
  Command& cmd = reg.add(
      app, "aaqst",
      "Single-scan state reconstruction from the joint spectrum of the "
      "input register and a maximally mixed ancilla register");
  cmd.bind("--n", p->n, "input-register qubits (count)");
  cmd.bind("--ancilla", p->ancilla, "ancilla-register qubits (count)");
  cmd.bind("--draws", p->draws,
           "seeded unitary candidates per experiment; the best-conditioned "
           "design wins (count)");
  cmd.bind("--noise", p->noise,
           "spectral noise sigma, relative to the largest ideal line "
           "amplitude (dimensionless)");
  cmd.bind("--state", p->state,
           "state to acquire: random | ghz | plus | zero | one | mixed, or "
           "a matrix JSON file");
  cmd.on_run([p, &reg](const Artifacts& art) {
    const std::uint64_t seed = reg.global.seed;
    const aam::DensityMatrix rho = make_state(p->state, p->n, seed);
    const aam::TomographyPlan plan =
        aam::build_plan(p->n, p->ancilla, seed, p->draws);
    const std::vector<aam::SpectralRecord> records =
        aam::acquire(plan, rho, p->noise, aam::mix_seed(seed, {0x6163717ULL}));
    const aam::ReconstructionResult rec = aam::reconstruct(plan, records);
    const double frob = (rec.matrix - rho.matrix()).norm();
    const aam::DensityMatrix physical = aam::project_to_physical(rec.matrix);
    art.json_result(
        {{"plan",
          {{"experiments", plan.experiments.size()},
           {"condition_number", plan.condition_number},
           {"min_experiments", aam::min_experiments(p->n, p->ancilla)}}},
         {"reconstruction",
          {{"matrix", aam::detail::matrix_to_json(rec.matrix)},
           {"residual", rec.residual},
           {"frobenius_error", frob}}},
         {"fidelity_post_projection", aam::state_fidelity(physical, rho)}});
  });
}

void register_sspt(CLI::App& app, Registry& reg) {
  struct Params {
    std::string process = "hadamard";
    double noise = 0.0;
    int draws = 20;
  };
  auto p = std::make_shared<Params>();
  Command& cmd = reg.add(
      app, "sspt",
      "Single-scan process tomography: chi matrix of a channel imprinted on "
      "half of a maximally entangled state");
  cmd.bind("--process", p->process,
           "channel: identity | notx | noty | hadamard | phase(theta) "
           "(radians), or a Kraus JSON file {n, kraus: [...]}");
  cmd.bind("--noise", p->noise,
           "spectral noise sigma, relative to the largest ideal line "
           "amplitude (dimensionless)");
  cmd.bind("--draws", p->draws,
           "seeded unitary candidates per experiment (count)");
  cmd.on_run([p, &reg](const Artifacts& art) {
    int n = 1;
    const aam::ProcessMap process = make_process(p->process, n);
    const int n_b = aam::min_sspt_readout_ancillas(n);
    const aam::SsptResult result =
        aam::sspt(process, n, n, n_b, p->noise, reg.global.seed, p->draws);
    const aam::ChiMatrix theory = aam::chi_from_process(process, n);
    art.json_result(
        {{"n", n},
         {"n_b", n_b},
         {"chi", aam::detail::parse_json(aam::chi_to_json(result.chi), "chi")},
         {"fidelity_vs_theory", aam::process_fidelity(result.chi, theory)},
         {"trace_preservation_defect",
          aam::trace_preservation_defect(result.chi)},
         {"min_eigenvalue", result.min_eigenvalue},
         {"cp_warning", result.cp_warning},
         {"reconstruction_residual", result.reconstruction_residual},
         {"plan_condition_number", result.plan_condition_number}});
  });
}

void register_counts(CLI::App& app, Registry& reg) {
  struct Params {
    int n_max = 5;
  };
  auto p = std::make_shared<Params>();
  Command& cmd = reg.add(
      app, "counts",
      "Minimum experiment counts for plain, ancilla-assisted and "
      "single-scan tomography per register size");
  cmd.bind("--n-max", p->n_max, "largest register size tabulated (count)");
  cmd.on_run([p](const Artifacts& art) {
    std::vector<std::string> rows;
    for (const aam::CountRow& r : aam::count_table(p->n_max))
      rows.push_back(fmt(r.n) + "," + fmt(r.m_qpt) + "," + fmt(r.n_a_aapt) +
                     "," + fmt(r.m_aapt) + "," + fmt(r.n_a_sspt) + "," +
                     fmt(r.n_b_sspt) + "," + fmt(r.m_sspt));
    art.csv({}, "n,m_qpt,n_a_aapt,m_aapt,n_a_sspt,n_b_sspt,m_sspt", rows);
    art.recipe({"title: tomography experiment counts",
                "file: " + art.csv_name(),
                "x: n [qubits]", "y: experiments [count, log scale]",
                "series: n vs m_qpt", "series: n vs m_aapt",
                "series: n vs m_sspt"});
  });
}

}  // namespace aamcli
