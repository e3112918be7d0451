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
#include <stdexcept>

#include <doctest.h>

#include "aam/noninvasive.hpp"
#include "aam/qcore.hpp"
#include "aam/rng.hpp"

using namespace aam;

namespace {

// Direct two-time reference: P(q1, q2) = tr(Pi_q2 u Pi_q1 rho Pi_q1 u^dag).
double two_time_reference(const DensityMatrix& rho, const UnitaryMatrix& u,
                          int q1, int q2) {
  const Matrix p1 = 0.5 * (identity(2) + (q1 == 0 ? 1.0 : -1.0) * pauli_z());
  const Matrix p2 = 0.5 * (identity(2) + (q2 == 0 ? 1.0 : -1.0) * pauli_z());
  const Matrix collapsed = p1 * rho.matrix() * p1;
  return (p2 * u.matrix() * collapsed * u.matrix().adjoint()).trace().real();
}

}  // namespace

TEST_SUITE("noninvasive") {

TEST_CASE("all three methods reproduce the projective reference") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityMatrix rho = random_density_matrix(2, mix_seed(3, {s}));
    const UnitaryMatrix u(rot_x(0.3 + 0.25 * double(s)));
    for (MeasurementMethod m : {MeasurementMethod::cnot,
                                MeasurementMethod::inrm,
                                MeasurementMethod::projective}) {
      const JointProbabilityTable t = joint_probabilities(rho, u, m);
      for (int q1 : {0, 1})
        for (int q2 : {0, 1})
          CHECK(std::abs(t(q1, q2) - two_time_reference(rho, u, q1, q2)) <
                1e-12);
    }
  }
}

TEST_CASE("methods agree pairwise to machine precision") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityMatrix rho = random_density_matrix(2, mix_seed(11, {s}));
    const UnitaryMatrix u = random_unitary(2, mix_seed(12, {s}));
    const auto a = joint_probabilities(rho, u, MeasurementMethod::cnot);
    const auto b = joint_probabilities(rho, u, MeasurementMethod::inrm);
    const auto c = joint_probabilities(rho, u, MeasurementMethod::projective);
    for (int q1 : {0, 1})
      for (int q2 : {0, 1}) {
        CHECK(std::abs(a(q1, q2) - b(q1, q2)) < 1e-12);
        CHECK(std::abs(a(q1, q2) - c(q1, q2)) < 1e-12);
      }
  }
}

TEST_CASE("tables are normalized with Bayes-consistent marginals") {
  const DensityMatrix rho = random_density_matrix(2, 21);
  const UnitaryMatrix u = random_unitary(2, 22);
  const auto t = joint_probabilities(rho, u, MeasurementMethod::inrm);
  double total = 0.0;
  for (int q1 : {0, 1})
    for (int q2 : {0, 1}) {
      CHECK(t(q1, q2) >= 0.0);
      total += t(q1, q2);
    }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  // First marginal equals the first-measurement populations.
  CHECK(t.marginal_first(0) ==
        doctest::Approx(rho.matrix()(0, 0).real()).epsilon(1e-12));
  CHECK(t.marginal_first(1) ==
        doctest::Approx(rho.matrix()(1, 1).real()).epsilon(1e-12));
}

TEST_CASE("identity evolution makes outcomes perfectly correlated") {
  const DensityMatrix rho = random_density_matrix(2, 31);
  const auto t = joint_probabilities(rho, UnitaryMatrix(identity(2)),
                                     MeasurementMethod::cnot);
  CHECK(t(0, 1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(t(1, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(conditional_entropy(t) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("binary entropy basics") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.11) ==
        doctest::Approx(-(0.11 * std::log2(0.11) + 0.89 * std::log2(0.89))));
}

TEST_CASE("conditional entropy of a product table") {
  JointProbabilityTable t;
  // Independent coins: H(Q2|Q1) = h(0.3).
  t.p[0][0] = 0.6 * 0.3;
  t.p[0][1] = 0.6 * 0.7;
  t.p[1][0] = 0.4 * 0.3;
  t.p[1][1] = 0.4 * 0.7;
  CHECK(conditional_entropy(t) ==
        doctest::Approx(binary_entropy(0.3)).epsilon(1e-12));
}

TEST_CASE("deficit matches the closed form on a grid") {
  for (int k = 0; k <= 24; ++k) {
    const double theta = M_PI * double(k) / 24.0;
    ElgiConfig cfg;
    cfg.theta = theta;
    for (MeasurementMethod m : {MeasurementMethod::cnot,
                                MeasurementMethod::inrm,
                                MeasurementMethod::projective})
      CHECK(std::abs(elgi_deficit(cfg, m) -
                     elgi_deficit_closed_form(theta)) < 1e-10);
  }
}

TEST_CASE("deficit matches the closed form for four measurements") {
  ElgiConfig cfg;
  cfg.n = 4;
  cfg.theta = 1.1;
  CHECK(std::abs(elgi_deficit(cfg) - elgi_deficit_closed_form(1.1, 4)) <
        1e-10);
}

TEST_CASE("deficit dips to about -0.134 at theta = pi/4") {
  ElgiConfig cfg;
  cfg.theta = M_PI / 4.0;
  CHECK(elgi_deficit(cfg) == doctest::Approx(-0.134222779).epsilon(1e-6));
  // Positive (macrorealism-compatible) at the window edges.
  cfg.theta = 0.0;
  CHECK(elgi_deficit(cfg) == doctest::Approx(0.0).epsilon(1e-12));
  cfg.theta = M_PI / 2.0;
  CHECK(elgi_deficit(cfg) > 0.0);
}

TEST_CASE("config validation") {
  ElgiConfig bad_n;
  bad_n.n = 1;
  CHECK_THROWS_AS(elgi_deficit(bad_n), std::invalid_argument);
  ElgiConfig bad_theta;
  bad_theta.theta = -0.1;
  CHECK_THROWS_AS(elgi_deficit(bad_theta), std::invalid_argument);
  bad_theta.theta = M_PI + 0.1;
  CHECK_THROWS_AS(elgi_deficit(bad_theta), std::invalid_argument);
  ElgiConfig bad_spin;
  bad_spin.spin = 1.0;
  CHECK_THROWS_AS(elgi_deficit(bad_spin), std::invalid_argument);
}

TEST_CASE("method names round trip") {
  for (MeasurementMethod m : {MeasurementMethod::cnot,
                              MeasurementMethod::inrm,
                              MeasurementMethod::projective})
    CHECK(measurement_method_from_name(measurement_method_name(m)) == m);
  CHECK_THROWS_AS(measurement_method_from_name("other"),
                  std::invalid_argument);
}

}  // TEST_SUITE
