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
#include <stdexcept>

#include <doctest.h>

#include "aam/qcore.hpp"
#include "aam/rng.hpp"

using namespace aam;

namespace {

// Independent reference: plain truncated power series of exp(scale * h),
// valid for the small norms used below.
Matrix expm_series(const Matrix& h, Complex scale) {
  Matrix acc = Matrix::Identity(h.rows(), h.cols());
  Matrix term = acc;
  for (int k = 1; k <= 60; ++k) {
    term = (term * h * scale / double(k)).eval();
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_SUITE("qcore") {

TEST_CASE("pauli matrices and identities") {
  CHECK(max_abs(pauli_x() * pauli_x() - identity(2)) < 1e-15);
  CHECK(max_abs(pauli_y() * pauli_y() - identity(2)) < 1e-15);
  CHECK(max_abs(pauli_z() * pauli_z() - identity(2)) < 1e-15);
  // XY = iZ cyclic algebra.
  CHECK(max_abs(pauli_x() * pauli_y() - Complex(0, 1) * pauli_z()) < 1e-15);
  CHECK(max_abs(hadamard() * pauli_x() * hadamard() - pauli_z()) < 1e-15);
  CHECK(is_unitary(hadamard()));
  CHECK(is_hermitian(hadamard()));
}

TEST_CASE("rotation gates match their exponentials") {
  for (double angle : {0.0, 0.3, -1.2, 3.1}) {
    CHECK(max_abs(rot_x(angle) -
                  expm_series(pauli_x(), Complex(0, -angle / 2))) < 1e-13);
    CHECK(max_abs(rot_y(angle) -
                  expm_series(pauli_y(), Complex(0, -angle / 2))) < 1e-13);
    CHECK(max_abs(rot_z(angle) -
                  expm_series(pauli_z(), Complex(0, -angle / 2))) < 1e-13);
  }
}

TEST_CASE("bit convention: qubit 0 is the most significant bit") {
  CHECK(bit_of(0b10, 0, 2) == 1);
  CHECK(bit_of(0b10, 1, 2) == 0);
  CHECK(bit_of(0b001, 2, 3) == 1);
  CHECK(qubit_count_for_dim(8) == 3);
  CHECK_THROWS_AS(qubit_count_for_dim(6), std::invalid_argument);
}

TEST_CASE("tensor is first-factor major") {
  // |1> (x) |0> = |10> = index 2 of dim 4.
  const Vector v = tensor(Matrix(basis_state(2, 1)), Matrix(basis_state(2, 0)))
                       .col(0);
  CHECK(std::abs(v(2) - 1.0) < 1e-15);
  // (A (x) B)(ij, kl) = A(i, k) B(j, l).
  const Matrix a = random_unitary(2, 7).matrix();
  const Matrix b = random_unitary(2, 8).matrix();
  const Matrix ab = tensor(a, b);
  CHECK(std::abs(ab(2 * 1 + 0, 2 * 0 + 1) - a(1, 0) * b(0, 1)) < 1e-15);
}

TEST_CASE("embed_operator places single-qubit operators by index") {
  const Matrix x1 = embed_operator(pauli_x(), {1}, 3);
  CHECK(max_abs(x1 - tensor(tensor(identity(2), pauli_x()), identity(2))) <
        1e-15);
  const Matrix x0 = embed_operator(pauli_x(), {0}, 2);
  CHECK(max_abs(x0 - tensor(pauli_x(), identity(2))) < 1e-15);
}

TEST_CASE("embed_operator handles permuted two-qubit targets") {
  const Matrix op = random_unitary(4, 11).matrix();
  // Targets (2, 0) on 3 qubits: op's first factor acts on qubit 2, its
  // second on qubit 0.  Check one matrix element by index arithmetic.
  const Matrix full = embed_operator(op, {2, 0}, 3);
  for (Index r = 0; r < 8; ++r)
    for (Index c = 0; c < 8; ++c) {
      const int rq0 = bit_of(r, 0, 3), rq1 = bit_of(r, 1, 3),
                rq2 = bit_of(r, 2, 3);
      const int cq0 = bit_of(c, 0, 3), cq1 = bit_of(c, 1, 3),
                cq2 = bit_of(c, 2, 3);
      const Complex want = (rq1 == cq1)
                               ? op(2 * rq2 + rq0, 2 * cq2 + cq0)
                               : Complex(0, 0);
      CHECK(std::abs(full(r, c) - want) < 1e-15);
    }
}

TEST_CASE("density matrix validation") {
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = 1.0;  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix{bad}, std::invalid_argument);

  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;  // negative eigenvalue
  CHECK_THROWS_AS(DensityMatrix{neg}, std::invalid_argument);

  Matrix off_trace = Matrix::Identity(2, 2);  // trace 2
  CHECK_THROWS_AS(DensityMatrix{off_trace}, std::invalid_argument);

  // Deviation kind: traceless, Hermitian, no positivity demand.
  CHECK_NOTHROW(DensityMatrix(Matrix(pauli_z()), StateKind::deviation));
  CHECK_THROWS_AS(DensityMatrix(Matrix(identity(2)), StateKind::deviation),
                  std::invalid_argument);
}

TEST_CASE("pure, basis and maximally mixed constructors") {
  const DensityMatrix plus = DensityMatrix::pure(
      (basis_state(2, 0) + basis_state(2, 1)) / std::sqrt(2.0));
  CHECK(std::abs(plus.matrix()(0, 1) - 0.5) < 1e-15);
  const DensityMatrix b2 = DensityMatrix::basis(4, 2);
  CHECK(std::abs(b2.matrix()(2, 2) - 1.0) < 1e-15);
  const DensityMatrix mm = DensityMatrix::maximally_mixed(8);
  CHECK(std::abs(mm.matrix().trace() - 1.0) < 1e-15);
  CHECK(std::abs(mm.matrix()(3, 3) - 0.125) < 1e-15);
}

TEST_CASE("partial trace of a product state factors") {
  const DensityMatrix a = random_density_matrix(2, 21);
  const DensityMatrix b = random_density_matrix(4, 22);
  const DensityMatrix ab = tensor(a, b);
  const DensityMatrix ta = partial_trace(ab, {0});
  const DensityMatrix tb = partial_trace(ab, {1, 2});
  CHECK(max_abs(ta.matrix() - a.matrix()) < 1e-13);
  CHECK(max_abs(tb.matrix() - b.matrix()) < 1e-13);
}

TEST_CASE("partial trace on an entangled state gives the mixed marginal") {
  Vector bell = (tensor(Matrix(basis_state(2, 0)), Matrix(basis_state(2, 0))) +
                 tensor(Matrix(basis_state(2, 1)), Matrix(basis_state(2, 1))))
                    .col(0) /
                std::sqrt(2.0);
  const DensityMatrix rho = DensityMatrix::pure(bell);
  const DensityMatrix left = partial_trace(rho, {0});
  CHECK(max_abs(left.matrix() - 0.5 * identity(2)) < 1e-15);
}

TEST_CASE("evolve conjugates and preserves class invariants") {
  const DensityMatrix rho = random_density_matrix(4, 31);
  const UnitaryMatrix u = random_unitary(4, 32);
  const DensityMatrix out = evolve(rho, u);
  CHECK(max_abs(out.matrix() -
                u.matrix() * rho.matrix() * u.matrix().adjoint()) < 1e-13);
  CHECK(std::abs(out.matrix().trace() - 1.0) < 1e-12);
}

TEST_CASE("expectation and trace_product agree") {
  const DensityMatrix rho = random_density_matrix(4, 41);
  Matrix h = Matrix::Zero(4, 4);
  h(0, 1) = Complex(0.3, -0.2);
  h(1, 0) = Complex(0.3, 0.2);
  h(2, 2) = -1.1;
  const HermitianObservable obs{h};
  const Complex tp = trace_product(rho.matrix(), h);
  CHECK(std::abs(expectation(rho, obs) - tp.real()) < 1e-14);
  CHECK(std::abs(tp.imag()) < 1e-14);
}

TEST_CASE("expm matches an independent power series") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto eng = make_engine(seed);
    std::normal_distribution<double> g(0.0, 0.5);
    Matrix h = Matrix::Zero(4, 4);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) h(i, j) = Complex(g(eng), g(eng));
    h = 0.5 * (h + h.adjoint().eval());
    CHECK(max_abs(expm(h, Complex(0, -0.7)) -
                  expm_series(h, Complex(0, -0.7))) < 1e-12);
    CHECK(is_unitary(expm(h, Complex(0, -0.7))));
  }
  // Non-Hermitian argument goes through the general path.
  Matrix n = Matrix::Zero(2, 2);
  n(0, 1) = 0.4;
  CHECK(max_abs(expm(n, Complex(1, 0)) - expm_series(n, Complex(1, 0))) <
        1e-13);
}

TEST_CASE("random unitary is Haar-like") {
  // Unitarity and determinism.
  const UnitaryMatrix u = random_unitary(8, 123);
  CHECK(is_unitary(u.matrix()));
  CHECK(max_abs(u.matrix() - random_unitary(8, 123).matrix()) == 0.0);
  CHECK(max_abs(u.matrix() - random_unitary(8, 124).matrix()) > 1e-3);

  // First moment: E|u_00|^2 = 1/d under Haar.
  const Index d = 4;
  double acc = 0.0;
  const int trials = 4000;
  for (int s = 0; s < trials; ++s)
    acc += std::norm(random_unitary(d, mix_seed(999, {std::uint64_t(s)}))
                         .matrix()(0, 0));
  acc /= trials;
  CHECK(std::abs(acc - 1.0 / double(d)) < 0.01);
}

TEST_CASE("random density matrix is a valid state") {
  const DensityMatrix rho = random_density_matrix(8, 17);
  CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-12);
  CHECK(is_hermitian(rho.matrix(), 1e-12));
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix(),
                                           Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues().minCoeff() >= -1e-12);
  CHECK(max_abs(rho.matrix() - random_density_matrix(8, 17).matrix()) == 0.0);
}

TEST_CASE("seed mixing separates index streams") {
  CHECK(mix_seed(1, {0}) != mix_seed(1, {1}));
  CHECK(mix_seed(1, {0, 1}) != mix_seed(1, {1, 0}));
  CHECK(mix_seed(1, {2}) != mix_seed(2, {2}));
  CHECK(mix_seed(5, {3, 4}) == mix_seed(5, {3, 4}));
}

}  // TEST_SUITE
