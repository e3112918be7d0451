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

#include <doctest.h>

#include "aam/qcore.hpp"
#include "aam/readout.hpp"

using namespace aam;

namespace {

DensityMatrix bloch_state(double theta, double phi) {
  Vector psi(2);
  psi(0) = std::cos(theta / 2);
  psi(1) = std::exp(Complex(0, phi)) * std::sin(theta / 2);
  return DensityMatrix::pure(psi);
}

}  // namespace

TEST_SUITE("readout") {

TEST_CASE("transverse expectations recover the Bloch vector") {
  for (double theta : {0.2, 1.1, 2.7})
    for (double phi : {0.0, 0.9, -2.0, 3.0}) {
      const auto [sx, sy] = transverse_expectations(bloch_state(theta, phi), 0);
      CHECK(sx == doctest::Approx(std::sin(theta) * std::cos(phi))
                      .epsilon(1e-12));
      CHECK(sy == doctest::Approx(std::sin(theta) * std::sin(phi))
                      .epsilon(1e-12));
    }
}

TEST_CASE("transverse expectations at cardinal states") {
  const Vector plus = (basis_state(2, 0) + basis_state(2, 1)) / std::sqrt(2.0);
  const Vector plus_i =
      (basis_state(2, 0) + Complex(0, 1) * basis_state(2, 1)) / std::sqrt(2.0);
  auto [px, py] = transverse_expectations(DensityMatrix::pure(plus), 0);
  CHECK(px == doctest::Approx(1.0));
  CHECK(py == doctest::Approx(0.0));
  auto [ix, iy] = transverse_expectations(DensityMatrix::pure(plus_i), 0);
  CHECK(ix == doctest::Approx(0.0));
  CHECK(iy == doctest::Approx(1.0));
}

TEST_CASE("per-qubit transverse expectations of a product state") {
  const DensityMatrix rho =
      tensor(bloch_state(0.9, 0.4), bloch_state(2.1, -1.3));
  const auto [x0, y0] = transverse_expectations(rho, 0);
  const auto [x1, y1] = transverse_expectations(rho, 1);
  CHECK(x0 == doctest::Approx(std::sin(0.9) * std::cos(0.4)).epsilon(1e-12));
  CHECK(y0 == doctest::Approx(std::sin(0.9) * std::sin(0.4)).epsilon(1e-12));
  CHECK(x1 == doctest::Approx(std::sin(2.1) * std::cos(-1.3)).epsilon(1e-12));
  CHECK(y1 == doctest::Approx(std::sin(2.1) * std::sin(-1.3)).epsilon(1e-12));
}

TEST_CASE("spectrum lists single-quantum lines qubit-major") {
  const DensityMatrix rho = random_density_matrix(8, 77);
  const SpectralRecord rec = spectrum(rho);
  REQUIRE(rec.n_qubits == 3);
  REQUIRE(rec.amplitudes.size() == 3u * 4u);  // n * 2^(n-1)
  // First line: qubit 0, others = 00 -> element <000|rho|100>.
  CHECK(rec.amplitudes[0].qubit == 0);
  CHECK(rec.amplitudes[0].others == 0u);
  CHECK(std::abs(rec.amplitudes[0].value - rho.matrix()(0, 4)) < 1e-15);
  // Qubit 1, others = (q0=1, q2=0) -> <100|rho|110>.
  bool found = false;
  for (const SpectralAmplitude& a : rec.amplitudes)
    if (a.qubit == 1 && a.others == 2u) {
      CHECK(std::abs(a.value - rho.matrix()(4, 6)) < 1e-15);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("spectrum of a single-qubit state is one line") {
  const DensityMatrix rho = bloch_state(1.0, 0.5);
  const SpectralRecord rec = spectrum(rho);
  REQUIRE(rec.amplitudes.size() == 1u);
  CHECK(std::abs(rec.amplitudes[0].value - rho.matrix()(0, 1)) < 1e-15);
}

TEST_CASE("noisy spectrum is seeded and scales with the largest line") {
  const DensityMatrix rho = random_density_matrix(4, 5);
  const SpectralRecord clean = spectrum(rho);
  const SpectralRecord a = spectrum(rho, 0.01, 99);
  const SpectralRecord b = spectrum(rho, 0.01, 99);
  const SpectralRecord c = spectrum(rho, 0.01, 100);
  REQUIRE(a.amplitudes.size() == clean.amplitudes.size());
  double max_amp = 0.0, max_dev = 0.0;
  for (size_t i = 0; i < clean.amplitudes.size(); ++i) {
    max_amp = std::max(max_amp, std::abs(clean.amplitudes[i].value));
    max_dev = std::max(max_dev, std::abs(a.amplitudes[i].value -
                                         clean.amplitudes[i].value));
    CHECK(a.amplitudes[i].value == b.amplitudes[i].value);
  }
  CHECK(max_dev > 0.0);
  CHECK(max_dev < 6.0 * 0.01 * max_amp);  // ~6 sigma
  bool differs = false;
  for (size_t i = 0; i < a.amplitudes.size(); ++i)
    differs = differs || a.amplitudes[i].value != c.amplitudes[i].value;
  CHECK(differs);
  CHECK(a.noise_sigma == 0.01);
  CHECK(a.seed.has_value());
  CHECK(!clean.seed.has_value());
}

TEST_CASE("zero noise equals the noiseless record") {
  const DensityMatrix rho = random_density_matrix(4, 6);
  const SpectralRecord clean = spectrum(rho);
  const SpectralRecord zero = spectrum(rho, 0.0, 1);
  for (size_t i = 0; i < clean.amplitudes.size(); ++i)
    CHECK(zero.amplitudes[i].value == clean.amplitudes[i].value);
}

TEST_CASE("diagonal populations") {
  const DensityMatrix rho = random_density_matrix(8, 9);
  const std::vector<double> pops = diagonal_populations(rho);
  REQUIRE(pops.size() == 8u);
  double total = 0.0;
  for (size_t k = 0; k < pops.size(); ++k) {
    CHECK(pops[k] == doctest::Approx(rho.matrix()(Index(k), Index(k)).real())
                         .epsilon(1e-14));
    total += pops[k];
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectral record json round trip") {
  const DensityMatrix rho = random_density_matrix(4, 13);
  const SpectralRecord rec = spectrum(rho, 0.02, 7);
  const SpectralRecord back =
      spectral_record_from_json(spectral_record_to_json(rec));
  REQUIRE(back.amplitudes.size() == rec.amplitudes.size());
  CHECK(back.n_qubits == rec.n_qubits);
  CHECK(back.noise_sigma == rec.noise_sigma);
  REQUIRE(back.seed.has_value());
  CHECK(*back.seed == 7u);
  for (size_t i = 0; i < rec.amplitudes.size(); ++i) {
    CHECK(back.amplitudes[i].qubit == rec.amplitudes[i].qubit);
    CHECK(back.amplitudes[i].others == rec.amplitudes[i].others);
    CHECK(back.amplitudes[i].value == rec.amplitudes[i].value);
  }
  CHECK_THROWS_AS(spectral_record_from_json("[]"), std::invalid_argument);
}

}  // TEST_SUITE
