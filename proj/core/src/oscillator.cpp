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

#include "aam/oscillator.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "aam/expectation.hpp"

namespace aam {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// 20-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; the
// other half mirrors).
constexpr int kGaussOrder = 20;
constexpr std::array<double, 10> kGaussNode = {
    0.0765265211334973, 0.2277858511416451, 0.3737060887154195,
    0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
    0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
    0.9931285991850949};
constexpr std::array<double, 10> kGaussWeight = {
    0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
    0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
    0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
    0.0176140071391521};

}  // namespace

Matrix lowering_operator(int levels) {
  require(levels >= 2, "lowering_operator: need at least two levels");
  Matrix a = Matrix::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

TruncatedOscillator make_oscillator(int levels, double delta_e) {
  require(levels >= 2, "make_oscillator: need at least two levels");
  const Matrix a = lowering_operator(levels);
  const Matrix ad = a.adjoint();
  const double s = 1.0 / std::sqrt(2.0);
  Matrix x = s * (a + ad);
  Matrix p = Complex(0.0, 1.0) * s * (ad - a);
  return TruncatedOscillator{levels, delta_e, HermitianObservable(std::move(x)),
                             HermitianObservable(std::move(p))};
}

UnitaryMatrix translation(const TruncatedOscillator& osc, double b) {
  require(std::isfinite(b), "translation: non-finite displacement");
  return UnitaryMatrix(expm(osc.p_op.matrix(), Complex(0.0, -b)));
}

QhoEncoding qho_encoding(int levels) {
  QhoEncoding enc;
  enc.levels = levels;
  enc.n_qubits = qubit_count_for_dim(levels);
  return enc;
}

const char* fcf_route_name(FcfRoute r) {
  return r == FcfRoute::direct ? "direct" : "circuit";
}

FcfRoute fcf_route_from_name(const std::string& name) {
  if (name == "direct") return FcfRoute::direct;
  if (name == "circuit") return FcfRoute::circuit;
  throw std::invalid_argument("unknown fcf route '" + name + "'");
}

double fcf(const TruncatedOscillator& osc, int m, int n, double b,
           FcfRoute route) {
  require(m >= 0 && m < osc.levels && n >= 0 && n < osc.levels,
          "fcf: level out of range");
  const UnitaryMatrix ut = translation(osc, b);
  if (route == FcfRoute::direct) return std::norm(ut.matrix()(m, n));

  // Circuit route: prepare the displaced eigenstate on the qubit encoding
  // and measure the level projector through the ancilla interferometer.
  qho_encoding(osc.levels);  // validates the power-of-two embedding
  const Vector displaced = ut.matrix().col(n);
  const DensityMatrix rho = DensityMatrix::pure(displaced);
  Matrix proj = Matrix::Zero(osc.levels, osc.levels);
  proj(m, m) = 1.0;
  return expect_projector(rho, HermitianObservable(std::move(proj)));
}

double hermite_function(int n, double x) {
  require(n >= 0, "hermite_function: negative index");
  // Normalized recurrence: psi_k = sqrt(2/k) x psi_{k-1}
  //                               - sqrt((k-1)/k) psi_{k-2}.
  const double psi0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return psi0;
  double prev = psi0;
  double cur = std::sqrt(2.0) * x * psi0;
  for (int k = 2; k <= n; ++k) {
    const double next = std::sqrt(2.0 / k) * x * cur -
                        std::sqrt(double(k - 1) / k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double fcf_analytic_oracle(int m, int n, double b) {
  require(m >= 0 && n >= 0 && m <= 64 && n <= 64,
          "fcf_analytic_oracle: level out of supported range");
  require(std::isfinite(b), "fcf_analytic_oracle: non-finite displacement");
  // Composite Gauss-Legendre over unit panels covering both functions'
  // supports; per-panel error is negligible at these widths.
  const double lo = -20.0, hi = 20.0 + std::abs(b);
  const int panels = int(std::ceil(hi - lo));
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + (hi - lo) * double(p) / panels;
    const double c = lo + (hi - lo) * double(p + 1) / panels;
    const double mid = 0.5 * (a + c), half = 0.5 * (c - a);
    for (int i = 0; i < kGaussOrder / 2; ++i) {
      for (const double sign : {-1.0, 1.0}) {
        const double x = mid + sign * half * kGaussNode[size_t(i)];
        acc += half * kGaussWeight[size_t(i)] * hermite_function(m, x) *
               hermite_function(n, x - b);
      }
    }
  }
  return acc * acc;
}

ContextualityObservables contextuality_observables(double beta, double eta) {
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double ce = std::cos(eta), se = std::sin(eta);
  // Pseudo-spin pairs: Gx = sx(x)1, Gz = -sy(x)sy, Gx' = sx(x)sz,
  // Gz' = -sx(x)sx.
  const Matrix A = tensor(pauli_x(), identity(2));
  const Matrix B = tensor(pauli_x(), cb * pauli_z() - sb * pauli_x());
  const Matrix C = -tensor(pauli_y(), pauli_y());
  const Matrix D = tensor(pauli_x(), ce * pauli_z() - se * pauli_x());
  return ContextualityObservables{beta, eta, HermitianObservable(A),
                                  HermitianObservable(B),
                                  HermitianObservable(C),
                                  HermitianObservable(D)};
}

double contextuality_I(int l, double beta, double eta) {
  require(l >= 0 && l < 4, "contextuality_I: level must be in {0,1,2,3}");
  const ContextualityObservables obs = contextuality_observables(beta, eta);
  const DensityMatrix rho = DensityMatrix::basis(4, l);
  const auto pair_expect = [&rho](const HermitianObservable& first,
                                  const HermitianObservable& second) {
    // tr(rho * first * second): `second` acts first in circuit time.
    const MoussaResult res =
        joint_expect(rho, UnitaryMatrix(second.matrix()),
                     UnitaryMatrix(first.matrix()));
    if (std::abs(res.value.imag()) > 1e-9)
      throw std::runtime_error("contextuality_I: imaginary readout residue");
    return res.value.real();
  };
  return pair_expect(obs.A, obs.B) + pair_expect(obs.B, obs.C) +
         pair_expect(obs.C, obs.D) - pair_expect(obs.A, obs.D);
}

}  // namespace aam
