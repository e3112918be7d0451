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

#include "aam/expectation.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "aam/readout.hpp"

namespace aam {

namespace {

std::vector<int> system_targets(int n_sys) {
  std::vector<int> t(static_cast<size_t>(n_sys));
  std::iota(t.begin(), t.end(), 1);
  return t;
}

DensityMatrix plus_ancilla_joint(const DensityMatrix& rho) {
  const Vector plus = (basis_state(2, 0) + basis_state(2, 1)) / std::sqrt(2.0);
  return tensor(DensityMatrix::pure(plus), rho);
}

MoussaResult run_circuit(const DensityMatrix& rho, const Circuit& c) {
  DensityMatrix joint = plus_ancilla_joint(rho);
  joint = evolve(joint, compile(c));
  MoussaResult res;
  res.circuit_used = c;
  res.ancilla_readout = transverse_expectations(joint, 0);
  res.value = Complex(res.ancilla_readout.first, res.ancilla_readout.second);
  return res;
}

}  // namespace

MoussaResult expect_unitary(const DensityMatrix& rho, const UnitaryMatrix& u) {
  if (rho.dim() != u.dim())
    throw std::invalid_argument("expect_unitary: dimension mismatch");
  if (rho.kind() != StateKind::normalized)
    throw std::invalid_argument("expect_unitary: state must be normalized");
  const int n_sys = rho.n_qubits();
  Circuit c(n_sys + 1);
  c.add(Gate::controlled(0, system_targets(n_sys), u.matrix()));
  return run_circuit(rho, c);
}

double expect_hermitian_unitary(const DensityMatrix& rho,
                                const HermitianObservable& a) {
  if (!a.is_unitary(kUnitaryTol))
    throw std::invalid_argument(
        "expect_hermitian_unitary: observable is not unitary");
  const MoussaResult res = expect_unitary(rho, UnitaryMatrix(a.matrix()));
  if (std::abs(res.value.imag()) > 1e-9)
    throw std::runtime_error(
        "expect_hermitian_unitary: imaginary readout residue");
  return res.value.real();
}

double expect_projector(const DensityMatrix& rho,
                        const HermitianObservable& p) {
  if (!p.is_projector(kUnitaryTol))
    throw std::invalid_argument("expect_projector: not idempotent");
  const Matrix reflection =
      2.0 * p.matrix() - Matrix::Identity(p.dim(), p.dim());
  const double r = expect_hermitian_unitary(rho, HermitianObservable(reflection));
  const double value = 0.5 * (1.0 + r);
  if (value < -1e-9 || value > 1.0 + 1e-9)
    throw std::runtime_error("expect_projector: value outside [0,1]");
  return value;
}

double expect_diagonal_hermitian(const DensityMatrix& rho,
                                 const HermitianObservable& a) {
  if (!a.is_diagonal(1e-12))
    throw std::invalid_argument(
        "expect_diagonal_hermitian: off-diagonal entries present");
  if (rho.dim() != a.dim())
    throw std::invalid_argument(
        "expect_diagonal_hermitian: dimension mismatch");
  double acc = 0.0;
  for (Index k = 0; k < a.dim(); ++k) {
    const double weight = a.matrix()(k, k).real();
    if (weight == 0.0) continue;
    Matrix proj = Matrix::Zero(a.dim(), a.dim());
    proj(k, k) = 1.0;
    acc += weight * expect_projector(rho, HermitianObservable(proj));
  }
  return acc;
}

MoussaResult joint_expect(const DensityMatrix& rho, const UnitaryMatrix& u,
                          const UnitaryMatrix& v) {
  if (rho.dim() != u.dim() || rho.dim() != v.dim())
    throw std::invalid_argument("joint_expect: dimension mismatch");
  if (rho.kind() != StateKind::normalized)
    throw std::invalid_argument("joint_expect: state must be normalized");
  const int n_sys = rho.n_qubits();
  Circuit c(n_sys + 1);
  c.add(Gate::controlled(0, system_targets(n_sys), u.matrix()));
  c.add(Gate::controlled(0, system_targets(n_sys), v.matrix()));
  return run_circuit(rho, c);
}

}  // namespace aam
