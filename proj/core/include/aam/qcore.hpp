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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace aam {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Validation tolerances.  Construction-time checks use these; algorithms that
// need tighter or looser bounds say so explicitly.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;
inline constexpr int kMaxQubits = 14;

// Register convention: qubit 0 is the most significant bit of a basis-state
// index, so |q0 q1 ... q_{n-1}> maps to index q0*2^{n-1} + ... + q_{n-1}.
// tensor(a, b) places a on the more significant qubits.

Matrix identity(Index dim);
const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();
const Matrix& hadamard();

Matrix rot_x(double angle);  // exp(-i angle X / 2)
Matrix rot_y(double angle);
Matrix rot_z(double angle);

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = kHermitianTol);
bool is_unitary(const Matrix& m, double tol = kUnitaryTol);

// Number of qubits for dim = 2^n; throws std::invalid_argument otherwise.
int qubit_count_for_dim(Index dim);

// Extracts the bit of `index` belonging to `qubit` under the convention above.
inline int bit_of(Index index, int qubit, int n_qubits) {
  return static_cast<int>((index >> (n_qubits - 1 - qubit)) & 1);
}

Vector basis_state(Index dim, Index k);

enum class StateKind {
  normalized,  // unit trace, positive semidefinite
  deviation    // traceless Hermitian (traceless part of a state)
};

// Hermitian matrix validated as a quantum state (or a deviation thereof).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m, StateKind kind = StateKind::normalized);

  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix basis(Index dim, Index k);
  static DensityMatrix maximally_mixed(Index dim);

  const Matrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }
  int n_qubits() const { return qubit_count_for_dim(m_.rows()); }
  StateKind kind() const { return kind_; }

 private:
  Matrix m_;
  StateKind kind_;
};

class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix u);

  const Matrix& matrix() const { return u_; }
  Index dim() const { return u_.rows(); }
  UnitaryMatrix dagger() const;

 private:
  Matrix u_;
};

class HermitianObservable {
 public:
  explicit HermitianObservable(Matrix a);

  const Matrix& matrix() const { return a_; }
  Index dim() const { return a_.rows(); }
  bool is_unitary(double tol = kUnitaryTol) const;
  // Projector check: P^2 = P within tol.
  bool is_projector(double tol = kUnitaryTol) const;
  bool is_diagonal(double tol = kHermitianTol) const;

 private:
  Matrix a_;
};

// Kronecker product, a on the more significant qubits.
Matrix tensor(const Matrix& a, const Matrix& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Traces out every qubit not listed in `keep`.  Indices must be unique and in
// range; the kept qubits retain their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);
Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep,
                     int n_qubits);

DensityMatrix evolve(const DensityMatrix& rho, const UnitaryMatrix& u);

// tr(rho A); requires a normalized state, returns the (real) expectation.
double expectation(const DensityMatrix& rho, const HermitianObservable& a);

// Re tr(rho m) for arbitrary matrices; no state validation.
Complex trace_product(const Matrix& rho, const Matrix& m);

// exp(scale * h).  Hermitian h uses an eigendecomposition; anything else
// falls back to a scaling-and-squaring Pade evaluation.
Matrix expm(const Matrix& h, Complex scale);

// Embeds an operator acting on `targets` (targets[0] most significant within
// the operator) into an n-qubit register; untouched qubits get identity.
Matrix embed_operator(const Matrix& op, const std::vector<int>& targets,
                      int n_qubits);

// Haar-distributed unitary via QR of a Ginibre sample with phase-corrected R.
UnitaryMatrix random_unitary(Index dim, std::uint64_t seed);

// Random density matrix: normalized Wishart sample G G^dag / tr.
DensityMatrix random_density_matrix(Index dim, std::uint64_t seed);

}  // namespace aam
