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

#include <string>

#include "aam/qcore.hpp"

namespace aam {

// Harmonic oscillator truncated to its lowest `levels` states, in units
// hbar = omega = mass = 1.  x and p come from the truncated ladder
// operators; [x, p] = i holds on the interior block only, the (d-1, d-1)
// corner picks up the truncation defect i(1 - d).
struct TruncatedOscillator {
  int levels = 4;
  double delta_e = 0.0;  // electronic offset; phase-only, never enters FCFs
  HermitianObservable x_op;
  HermitianObservable p_op;
};

// a with a(n-1, n) = sqrt(n).
Matrix lowering_operator(int levels);

TruncatedOscillator make_oscillator(int levels = 4, double delta_e = 0.0);

// Displacement U_T(b) = exp(-i p b): shifts x by +b.
UnitaryMatrix translation(const TruncatedOscillator& osc, double b);

// Level <-> qubit-register mapping: level index equals basis-state index
// (|0> = |up,up>, |1> = |up,down>, ... for d = 4).
struct QhoEncoding {
  int levels = 4;
  int n_qubits = 2;
};
QhoEncoding qho_encoding(int levels);

enum class FcfRoute {
  direct,  // |<m|U_T(b)|n>|^2 by matrix element
  circuit  // ancilla-projector measurement on the qubit encoding
};
const char* fcf_route_name(FcfRoute r);
FcfRoute fcf_route_from_name(const std::string& name);

// Franck-Condon factor between ground level m and displaced level n.
double fcf(const TruncatedOscillator& osc, int m, int n, double b,
           FcfRoute route = FcfRoute::direct);

// Infinite-dimensional reference: quadrature overlap of Hermite functions
// psi_m(x) and psi_n(x - b), squared.
double fcf_analytic_oracle(int m, int n, double b);

// Orthonormal oscillator eigenfunction psi_n(x).
double hermite_function(int n, double x);

// Pseudo-spin observables of the two-qubit QHO encoding.  All four are
// Hermitian and unitary; (A,B), (B,C), (C,D), (D,A) commute for every
// (beta, eta).
struct ContextualityObservables {
  double beta = 0.0;
  double eta = 0.0;
  HermitianObservable A, B, C, D;
};
ContextualityObservables contextuality_observables(double beta, double eta);

// I = <AB> + <BC> + <CD> - <AD> on QHO level `l`, each term measured through
// a joint ancilla circuit on three qubits.  Noncontextual bound 2, quantum
// bound 2*sqrt(2).
double contextuality_I(int l, double beta, double eta);

}  // namespace aam
