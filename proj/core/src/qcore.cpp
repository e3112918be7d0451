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

#include "aam/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "aam/rng.hpp"

namespace aam {

namespace {

constexpr Complex kI{0.0, 1.0};

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_finite(const Matrix& m, const std::string& what) {
  if (!m.allFinite()) throw std::invalid_argument(what + ": non-finite entries");
}

}  // namespace

Matrix identity(Index dim) {
  require(dim >= 1, "identity: dim must be positive");
  return Matrix::Identity(dim, dim);
}

const Matrix& pauli_x() {
  static const Matrix m = [] {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
  }();
  return m;
}

const Matrix& pauli_y() {
  static const Matrix m = [] {
    Matrix y(2, 2);
    y << 0, -kI, kI, 0;
    return y;
  }();
  return m;
}

const Matrix& pauli_z() {
  static const Matrix m = [] {
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    return z;
  }();
  return m;
}

const Matrix& hadamard() {
  static const Matrix m = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix h(2, 2);
    h << s, s, s, -s;
    return h;
  }();
  return m;
}

Matrix rot_x(double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  Matrix r(2, 2);
  r << c, -kI * s, -kI * s, c;
  return r;
}

Matrix rot_y(double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  Matrix r(2, 2);
  r << c, -s, s, c;
  return r;
}

Matrix rot_z(double angle) {
  Matrix r = Matrix::Zero(2, 2);
  r(0, 0) = std::exp(-kI * (angle / 2));
  r(1, 1) = std::exp(kI * (angle / 2));
  return r;
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())) <= tol;
}

int qubit_count_for_dim(Index dim) {
  Index d = dim;
  int n = 0;
  while (d > 1 && (d & 1) == 0) {
    d >>= 1;
    ++n;
  }
  if (d != 1 || n == 0)
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not a power of two >= 2");
  if (n > kMaxQubits)
    throw std::invalid_argument("register exceeds " +
                                std::to_string(kMaxQubits) + " qubits");
  return n;
}

Vector basis_state(Index dim, Index k) {
  require(dim >= 1 && k >= 0 && k < dim, "basis_state: index out of range");
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return v;
}

DensityMatrix::DensityMatrix(Matrix m, StateKind kind)
    : m_(std::move(m)), kind_(kind) {
  require(m_.rows() == m_.cols() && m_.rows() >= 1,
          "DensityMatrix: matrix must be square and non-empty");
  require_finite(m_, "DensityMatrix");
  require(is_hermitian(m_, kHermitianTol), "DensityMatrix: not Hermitian");
  const double tr = m_.trace().real();
  if (kind_ == StateKind::normalized) {
    require(std::abs(tr - 1.0) <= kTraceTol,
            "DensityMatrix: trace != 1 for normalized state");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
    require(es.eigenvalues().minCoeff() >= kEigenvalueFloor,
            "DensityMatrix: negative eigenvalue");
  } else {
    require(std::abs(tr) <= kTraceTol,
            "DensityMatrix: trace != 0 for deviation state");
  }
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double norm = psi.norm();
  require(norm > 0, "pure: zero vector");
  Vector v = psi / norm;
  return DensityMatrix(v * v.adjoint(), StateKind::normalized);
}

DensityMatrix DensityMatrix::basis(Index dim, Index k) {
  return pure(basis_state(dim, k));
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  require(dim >= 1, "maximally_mixed: dim must be positive");
  return DensityMatrix(Matrix::Identity(dim, dim) / double(dim),
                       StateKind::normalized);
}

UnitaryMatrix::UnitaryMatrix(Matrix u) : u_(std::move(u)) {
  require(u_.rows() == u_.cols() && u_.rows() >= 1,
          "UnitaryMatrix: matrix must be square and non-empty");
  require_finite(u_, "UnitaryMatrix");
  require(aam::is_unitary(u_, kUnitaryTol), "UnitaryMatrix: not unitary");
}

UnitaryMatrix UnitaryMatrix::dagger() const { return UnitaryMatrix(u_.adjoint()); }

HermitianObservable::HermitianObservable(Matrix a) : a_(std::move(a)) {
  require(a_.rows() == a_.cols() && a_.rows() >= 1,
          "HermitianObservable: matrix must be square and non-empty");
  require_finite(a_, "HermitianObservable");
  require(is_hermitian(a_, kHermitianTol),
          "HermitianObservable: not Hermitian");
}

bool HermitianObservable::is_unitary(double tol) const {
  return aam::is_unitary(a_, tol);
}

bool HermitianObservable::is_projector(double tol) const {
  return max_abs(a_ * a_ - a_) <= tol;
}

bool HermitianObservable::is_diagonal(double tol) const {
  Matrix off = a_;
  off.diagonal().setZero();
  return max_abs(off) <= tol;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  StateKind kind = (a.kind() == StateKind::normalized &&
                    b.kind() == StateKind::normalized)
                       ? StateKind::normalized
                       : StateKind::deviation;
  // deviation ⊗ deviation is traceless only through the product of traces;
  // guard the cases the algebra does not close over.
  if (a.kind() == StateKind::deviation && b.kind() == StateKind::deviation)
    throw std::invalid_argument("tensor: deviation x deviation undefined");
  return DensityMatrix(tensor(a.matrix(), b.matrix()), kind);
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep,
                     int n_qubits) {
  require(Index(1) << n_qubits == rho.rows() && rho.rows() == rho.cols(),
          "partial_trace: dimension mismatch");
  std::vector<int> k = keep;
  std::sort(k.begin(), k.end());
  require(std::adjacent_find(k.begin(), k.end()) == k.end(),
          "partial_trace: duplicate qubit index");
  for (int q : k)
    require(q >= 0 && q < n_qubits, "partial_trace: qubit index out of range");

  std::vector<int> traced;
  for (int q = 0; q < n_qubits; ++q)
    if (!std::binary_search(k.begin(), k.end(), q)) traced.push_back(q);

  const int nk = int(k.size()), nt = int(traced.size());
  const Index dk = Index(1) << nk, dt = Index(1) << nt;
  // Compose a full-register index from kept-subregister bits and traced bits.
  auto full_index = [&](Index kept_bits, Index traced_bits) {
    Index idx = 0;
    for (int b = 0; b < nk; ++b)
      idx |= Index(bit_of(kept_bits, b, nk)) << (n_qubits - 1 - k[size_t(b)]);
    for (int b = 0; b < nt; ++b)
      idx |= Index(bit_of(traced_bits, b, nt))
             << (n_qubits - 1 - traced[size_t(b)]);
    return idx;
  };

  Matrix out = Matrix::Zero(dk, dk);
  for (Index i = 0; i < dk; ++i)
    for (Index j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (Index e = 0; e < dt; ++e)
        acc += rho(full_index(i, e), full_index(j, e));
      out(i, j) = acc;
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  Matrix out = partial_trace(rho.matrix(), keep, rho.n_qubits());
  return DensityMatrix(std::move(out), rho.kind());
}

DensityMatrix evolve(const DensityMatrix& rho, const UnitaryMatrix& u) {
  require(rho.dim() == u.dim(), "evolve: dimension mismatch");
  Matrix out = u.matrix() * rho.matrix() * u.matrix().adjoint();
  // Symmetrize away the accumulated round-off before revalidation.
  out = 0.5 * (out + out.adjoint().eval());
  return DensityMatrix(std::move(out), rho.kind());
}

double expectation(const DensityMatrix& rho, const HermitianObservable& a) {
  require(rho.dim() == a.dim(), "expectation: dimension mismatch");
  require(rho.kind() == StateKind::normalized,
          "expectation: state must be normalized");
  const Complex tr = (rho.matrix() * a.matrix()).trace();
  if (std::abs(tr.imag()) > 1e-8)
    throw std::invalid_argument("expectation: trace has imaginary part " +
                                std::to_string(tr.imag()));
  return tr.real();
}

Complex trace_product(const Matrix& rho, const Matrix& m) {
  require(rho.rows() == m.rows() && rho.cols() == m.cols() &&
              rho.rows() == rho.cols(),
          "trace_product: dimension mismatch");
  return (rho * m).trace();
}

Matrix expm(const Matrix& h, Complex scale) {
  require(h.rows() == h.cols() && h.rows() >= 1, "expm: matrix must be square");
  require_finite(h, "expm");
  if (is_hermitian(h, kHermitianTol)) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const Eigen::VectorXd& ev = es.eigenvalues();
    Vector phases(ev.size());
    for (Index i = 0; i < ev.size(); ++i)
      phases(i) = std::exp(scale * ev(i));
    return es.eigenvectors() * phases.asDiagonal() *
           es.eigenvectors().adjoint();
  }
  return Matrix(scale * h).exp();
}

Matrix embed_operator(const Matrix& op, const std::vector<int>& targets,
                      int n_qubits) {
  const int m = int(targets.size());
  require(m >= 1 && m <= n_qubits, "embed_operator: bad target count");
  require(op.rows() == op.cols() && op.rows() == (Index(1) << m),
          "embed_operator: operator dim does not match target count");
  std::vector<int> sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "embed_operator: duplicate target");
  for (int q : targets)
    require(q >= 0 && q < n_qubits, "embed_operator: target out of range");

  const Index dim = Index(1) << n_qubits;
  const Index sub = Index(1) << m;
  Matrix full = Matrix::Zero(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    Index r_sub = 0;
    Index base = r;
    for (int b = 0; b < m; ++b) {
      const int shift = n_qubits - 1 - targets[size_t(b)];
      r_sub |= Index((r >> shift) & 1) << (m - 1 - b);
      base &= ~(Index(1) << shift);
    }
    for (Index c_sub = 0; c_sub < sub; ++c_sub) {
      Index c = base;
      for (int b = 0; b < m; ++b) {
        const int shift = n_qubits - 1 - targets[size_t(b)];
        c |= Index(bit_of(c_sub, b, m)) << shift;
      }
      full(r, c) = op(r_sub, c_sub);
    }
  }
  return full;
}

UnitaryMatrix random_unitary(Index dim, std::uint64_t seed) {
  require(dim >= 1, "random_unitary: dim must be positive");
  std::mt19937_64 eng = make_engine(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      const double re = gauss(eng);
      const double im = gauss(eng);
      g(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge so the distribution is Haar, not QR-convention biased.
  for (Index i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    const double a = std::abs(d);
    q.col(i) *= (a > 0) ? d / a : Complex(1.0, 0.0);
  }
  return UnitaryMatrix(std::move(q));
}

DensityMatrix random_density_matrix(Index dim, std::uint64_t seed) {
  require(dim >= 1, "random_density_matrix: dim must be positive");
  std::mt19937_64 eng = make_engine(splitmix64(seed ^ 0x5a5a5a5a5a5a5a5aULL));
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      const double re = gauss(eng);
      const double im = gauss(eng);
      g(i, j) = Complex(re, im);
    }
  Matrix w = g * g.adjoint();
  w = 0.5 * (w + w.adjoint().eval());
  w /= w.trace().real();
  return DensityMatrix(std::move(w), StateKind::normalized);
}

}  // namespace aam
