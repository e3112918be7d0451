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
#include <string>
#include <vector>

#include "aam/qcore.hpp"
#include "aam/readout.hpp"

namespace aam {

// ---------------------------------------------------------------------------
// Experiment counting

// Independent acquisitions needed to fix the 4^n - 1 real unknowns of an
// n-qubit state when each acquisition yields (n + n_hat) * 2^(n + n_hat)
// real spectral parameters.
long min_experiments(int n, int n_hat);

// Smallest readout-ancilla count that lets the 2n-qubit process-carrier
// state be reconstructed in one acquisition.
int min_sspt_readout_ancillas(int n);

struct CountRow {
  int n = 0;
  long m_qpt = 0;                    // 4^n basis states x experiments
  long m_aapt = 0;                   // single scan set, n_a = n ancillas
  int n_a_aapt = 0;
  long m_sspt = 0;
  int n_a_sspt = 0;                  // faithful ancilla register
  int n_b_sspt = 0;                  // readout ancilla register
};
std::vector<CountRow> count_table(int n_max);

// ---------------------------------------------------------------------------
// Ancilla-assisted state tomography

// One readout unitary, stored factored: the full operator is
// (1 (x) ancilla_local) * sum_a blocks[a] (x) |a><a| with the ancilla on
// the least significant qubits.
struct TomographyExperiment {
  Matrix ancilla_local;        // V
  std::vector<Matrix> blocks;  // U_{ka}, one per ancilla basis state
};

UnitaryMatrix experiment_unitary(const TomographyExperiment& e);

struct TomographyPlan {
  int n = 0;
  int n_hat = 0;
  std::vector<TomographyExperiment> experiments;
  std::uint64_t seed = 0;
  int draws = 0;
  double condition_number = 0.0;
};

struct DesignMatrix {
  Eigen::MatrixXd matrix;  // (experiments * lines * 2) x (4^n - 1)
};

// Orthonormal traceless Hermitian basis of a dim-dimensional space
// (generalized Gell-Mann set), dim^2 - 1 operators.
std::vector<Matrix> traceless_hermitian_basis(Index dim);

// Real linear map from the deviation coefficients of the input state to the
// stacked (Re, Im) spectral amplitudes of every experiment.
DesignMatrix assemble_design_matrix(const TomographyPlan& plan);
double design_condition_number(const DesignMatrix& d);

// Haar-random blocks and ancilla rotation V; keeps the best-conditioned of
// `draws` seeded candidates.  Deterministic in (seed, draws).  V must not
// have uniform |V(b,a)|^2 (Hadamard powers do): that degeneracy collapses
// every input-register line onto the same block average and the design
// matrix loses rank.
TomographyPlan build_plan(int n, int n_hat, std::uint64_t seed,
                          int draws = 20);

// Simulated acquisition: rho (x) 1/2^n_hat, evolved by each experiment
// unitary, read out as spectra.  The noisy overload adds relative Gaussian
// noise per record, seeded per experiment.
std::vector<SpectralRecord> acquire(const TomographyPlan& plan,
                                    const DensityMatrix& rho);
std::vector<SpectralRecord> acquire(const TomographyPlan& plan,
                                    const DensityMatrix& rho,
                                    double noise_sigma,
                                    std::uint64_t noise_seed);

struct ReconstructionResult {
  Matrix matrix;  // deviation part, plus identity/N when kind=normalized
  StateKind kind = StateKind::deviation;
  double residual = 0.0;
  double condition_number = 0.0;
};

// Least-squares inversion of the design system.  Throws std::runtime_error
// when the plan's condition number exceeds 1e6 or the residual is
// inconsistent with the records' noise level.
ReconstructionResult reconstruct(const TomographyPlan& plan,
                                 const std::vector<SpectralRecord>& records,
                                 StateKind kind = StateKind::normalized);

// Nearest-physical-state projection: clip negative eigenvalues, renormalize.
DensityMatrix project_to_physical(const Matrix& rho);

// Uhlmann fidelity tr(sqrt(sqrt(a) b sqrt(a)))^2.
double state_fidelity(const DensityMatrix& a, const DensityMatrix& b);

// ---------------------------------------------------------------------------
// Process tomography

// {1, sx, sy, sz}^(x)n in lexicographic order; the chi-matrix operator
// basis (plain Pauli products, squaring to identity).
std::vector<Matrix> pauli_product_basis(int n);

// Completely positive map as a Kraus list.
struct ProcessMap {
  std::vector<Matrix> kraus;

  static ProcessMap from_unitary(Matrix u);
  static ProcessMap from_kraus(std::vector<Matrix> ks);
  Matrix apply(const Matrix& rho) const;
  Index dim() const;
};

struct ChiMatrix {
  int n = 1;
  Matrix chi;  // 4^n x 4^n in the Pauli product basis
};

// Expansion coefficients of E_m E_rs E_n^dag over matrix units, flattened to
// B[(j, k), (m, n)] with j = r*N + s (row-major matrix-unit index).
Eigen::MatrixXcd beta_matrix(int n);

// Theory route: chi accumulated from the Pauli expansion of each Kraus
// operator.
ChiMatrix chi_from_process(const ProcessMap& process, int n);

// Channel action sum_mn chi_mn E_m rho E_n^dag.
Matrix apply_chi(const ChiMatrix& chi, const Matrix& rho);

// max |sum_mn chi_mn E_n^dag E_m - 1|.
double trace_preservation_defect(const ChiMatrix& chi);
double min_chi_eigenvalue(const ChiMatrix& chi);

struct SsptResult {
  ChiMatrix chi;
  double reconstruction_residual = 0.0;
  double plan_condition_number = 0.0;
  double min_eigenvalue = 0.0;
  bool cp_warning = false;  // min eigenvalue below -1e-6
};

// Single-scan process tomography: imprint the process on half of a
// maximally entangled 2n-qubit state, reconstruct that state in one
// acquisition with n_b readout ancillas, then solve beta * chi = lambda.
SsptResult sspt(const ProcessMap& process, int n, int n_a, int n_b,
                double noise_sigma, std::uint64_t seed, int draws = 20);

// Normalized Hilbert-Schmidt overlap |tr(a^dag b)| / (|a| |b|).
double process_fidelity(const ChiMatrix& a, const ChiMatrix& b);

std::string chi_to_json(const ChiMatrix& chi);
ChiMatrix chi_from_json(const std::string& text);

}  // namespace aam
