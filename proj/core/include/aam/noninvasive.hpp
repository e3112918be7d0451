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

#include <array>
#include <string>

#include "aam/qcore.hpp"

namespace aam {

enum class MeasurementMethod {
  cnot,        // ancilla-copy circuit, both outcome rows from one run
  inrm,        // negative-result rows from a CNOT run plus an anti-CNOT run
  projective   // invasive reference: collapse, evolve, measure
};

const char* measurement_method_name(MeasurementMethod m);
MeasurementMethod measurement_method_from_name(const std::string& name);

// Two sequential sigma_z outcomes; q = 0 labels the +1 eigenvalue.
struct JointProbabilityTable {
  std::array<std::array<double, 2>, 2> p{};  // p[q1][q2]
  MeasurementMethod method = MeasurementMethod::cnot;

  double operator()(int q1, int q2) const { return p[size_t(q1)][size_t(q2)]; }
  double marginal_first(int q1) const {
    return p[size_t(q1)][0] + p[size_t(q1)][1];
  }
};

// Joint probabilities of measuring sigma_z, evolving the system by u, and
// measuring sigma_z again, with the first measurement realized per `method`.
JointProbabilityTable joint_probabilities(const DensityMatrix& rho,
                                          const UnitaryMatrix& u,
                                          MeasurementMethod method);

// H(Q2|Q1) in bits; zero-probability terms contribute 0.
double conditional_entropy(const JointProbabilityTable& table);

// Binary Shannon entropy h(p) in bits.
double binary_entropy(double p);

struct ElgiConfig {
  int n = 3;               // number of sequential measurements
  double theta = 0.0;      // total rotation between first and last, radians
  double spin = 0.5;       // only s = 1/2 supported
  DensityMatrix initial_state = DensityMatrix::maximally_mixed(2);
};

// Information deficit D_n(theta) in bits: negative values witness the
// failure of macrorealism.  Evolution between consecutive measurements is
// RotX(theta / (n-1)).
double elgi_deficit(const ElgiConfig& cfg,
                    MeasurementMethod method = MeasurementMethod::cnot);

// Same quantity from binary entropies alone: for the maximally mixed input,
// D_n = [(n-1) h(cos^2(theta/(2(n-1)))) - h(cos^2(theta/2))] / log2(2s+1).
// Independent of the circuit path; serves as its cross-check.
double elgi_deficit_closed_form(double theta, int n = 3);

}  // namespace aam
