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

#include "aam/noninvasive.hpp"

#include <cmath>
#include <stdexcept>

#include "aam/circuits.hpp"
#include "aam/readout.hpp"

namespace aam {

namespace {

constexpr double kProbFloor = 1e-14;

// Ancilla = qubit 0, system = qubit 1.  Copy the system's z-basis value onto
// the ancilla with `copy`, evolve the system, return the four populations
// indexed |ancilla system>.
std::array<double, 4> copy_evolve_populations(const DensityMatrix& rho,
                                              const UnitaryMatrix& u,
                                              const UnitaryMatrix& copy) {
  DensityMatrix joint = tensor(DensityMatrix::basis(2, 0), rho);
  joint = evolve(joint, copy);
  joint = evolve(joint, UnitaryMatrix(tensor(identity(2), u.matrix())));
  const std::vector<double> pops = diagonal_populations(joint);
  return {pops[0], pops[1], pops[2], pops[3]};
}

void validate_inputs(const DensityMatrix& rho, const UnitaryMatrix& u) {
  if (rho.dim() != 2 || u.dim() != 2)
    throw std::invalid_argument(
        "joint_probabilities: single-qubit system required");
  if (rho.kind() != StateKind::normalized)
    throw std::invalid_argument(
        "joint_probabilities: state must be normalized");
}

}  // namespace

const char* measurement_method_name(MeasurementMethod m) {
  switch (m) {
    case MeasurementMethod::cnot: return "cnot";
    case MeasurementMethod::inrm: return "inrm";
    case MeasurementMethod::projective: return "projective";
  }
  throw std::invalid_argument("measurement_method_name: bad enum value");
}

MeasurementMethod measurement_method_from_name(const std::string& name) {
  if (name == "cnot") return MeasurementMethod::cnot;
  if (name == "inrm") return MeasurementMethod::inrm;
  if (name == "projective") return MeasurementMethod::projective;
  throw std::invalid_argument("unknown measurement method '" + name + "'");
}

JointProbabilityTable joint_probabilities(const DensityMatrix& rho,
                                          const UnitaryMatrix& u,
                                          MeasurementMethod method) {
  validate_inputs(rho, u);
  JointProbabilityTable table;
  table.method = method;
  switch (method) {
    case MeasurementMethod::cnot: {
      // CNOT(system -> ancilla) writes q1 into the ancilla; both rows read
      // from one run.
      const auto pops = copy_evolve_populations(rho, u, cnot_matrix(1, 0, 2));
      table.p = {{{pops[0], pops[1]}, {pops[2], pops[3]}}};
      break;
    }
    case MeasurementMethod::inrm: {
      // Negative-result rows only: with CNOT the ancilla stays |0> exactly
      // when q1 = 0; with anti-CNOT exactly when q1 = 1.  The recorded
      // branches never flip the ancilla.
      const auto cn = copy_evolve_populations(rho, u, cnot_matrix(1, 0, 2));
      const auto anti =
          copy_evolve_populations(rho, u, anti_cnot_matrix(1, 0, 2));
      table.p = {{{cn[0], cn[1]}, {anti[0], anti[1]}}};
      break;
    }
    case MeasurementMethod::projective: {
      // Lueders collapse after the first measurement, then evolve and
      // measure each branch.
      for (int q1 = 0; q1 < 2; ++q1) {
        const double p1 = rho.matrix()(q1, q1).real();
        for (int q2 = 0; q2 < 2; ++q2) {
          const Complex amp = u.matrix()(q2, q1);
          table.p[size_t(q1)][size_t(q2)] = p1 * std::norm(amp);
        }
      }
      break;
    }
  }
  double sum = 0.0;
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2) {
      const double v = table.p[size_t(q1)][size_t(q2)];
      if (v < -1e-10 || v > 1.0 + 1e-10)
        throw std::runtime_error("joint_probabilities: entry out of range");
      sum += v;
    }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::runtime_error("joint_probabilities: table does not sum to 1");
  return table;
}

double binary_entropy(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12)
    throw std::invalid_argument("binary_entropy: p outside [0,1]");
  double h = 0.0;
  if (p > 0.0 && p < 1.0)
    h = -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double conditional_entropy(const JointProbabilityTable& table) {
  double h = 0.0;
  for (int q1 = 0; q1 < 2; ++q1) {
    const double p1 = table.marginal_first(q1);
    if (p1 <= kProbFloor) {
      for (int q2 = 0; q2 < 2; ++q2)
        if (table(q1, q2) > kProbFloor)
          throw std::invalid_argument(
              "conditional_entropy: joint entry without marginal support");
      continue;
    }
    for (int q2 = 0; q2 < 2; ++q2) {
      const double joint = table(q1, q2);
      if (joint <= kProbFloor) continue;
      h -= joint * std::log2(joint / p1);
    }
  }
  return h;
}

namespace {

double conditional_entropy_for_angle(const ElgiConfig& cfg, double phi,
                                     MeasurementMethod method) {
  return conditional_entropy(joint_probabilities(
      cfg.initial_state, UnitaryMatrix(rot_x(phi)), method));
}

}  // namespace

double elgi_deficit(const ElgiConfig& cfg, MeasurementMethod method) {
  if (cfg.n < 2) throw std::invalid_argument("elgi_deficit: n must be >= 2");
  if (cfg.spin != 0.5)
    throw std::invalid_argument("elgi_deficit: only spin 1/2 supported");
  if (!(cfg.theta >= 0.0 && cfg.theta <= M_PI))
    throw std::invalid_argument("elgi_deficit: theta outside [0, pi]");
  const double denom = std::log2(2.0 * cfg.spin + 1.0);
  const double h_step =
      conditional_entropy_for_angle(cfg, cfg.theta / (cfg.n - 1), method);
  const double h_total = conditional_entropy_for_angle(cfg, cfg.theta, method);
  return ((cfg.n - 1) * h_step - h_total) / denom;
}

double elgi_deficit_closed_form(double theta, int n) {
  if (n < 2)
    throw std::invalid_argument("elgi_deficit_closed_form: n must be >= 2");
  // RotX(phi) sends a z-eigenstate to cos^2(phi/2) : sin^2(phi/2) outcome
  // odds, so each conditional entropy is a binary entropy.
  const auto h_of = [](double phi) {
    const double c = std::cos(phi / 2);
    return binary_entropy(c * c);
  };
  return (n - 1) * h_of(theta / (n - 1)) - h_of(theta);
}

}  // namespace aam
