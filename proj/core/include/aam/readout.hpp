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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aam/qcore.hpp"

namespace aam {

// One single-quantum coherence line: the density-matrix element
// <m'|rho|m> where m' has bit `qubit` = 0, m has bit `qubit` = 1 and the
// remaining qubits spell out `others` (register order, most significant
// first).
struct SpectralAmplitude {
  int qubit = 0;
  std::uint64_t others = 0;
  Complex value{0.0, 0.0};
};

// The observable content of one acquisition: n * 2^(n-1) complex lines,
// qubit-major with `others` ascending.
struct SpectralRecord {
  int n_qubits = 0;
  std::vector<SpectralAmplitude> amplitudes;
  double noise_sigma = 0.0;  // relative to the largest ideal amplitude
  std::optional<std::uint64_t> seed;
};

// (<sigma_x>, <sigma_y>) of one qubit of a normalized state.
std::pair<double, double> transverse_expectations(const DensityMatrix& rho,
                                                  int qubit);

SpectralRecord spectrum(const DensityMatrix& rho);
// Adds Gaussian noise of std `noise_sigma` * max ideal |amplitude| to the
// real and imaginary part of every line; deterministic in `seed`.
SpectralRecord spectrum(const DensityMatrix& rho, double noise_sigma,
                        std::uint64_t seed);

// Real parts of the diagonal of a normalized state.
std::vector<double> diagonal_populations(const DensityMatrix& rho);

std::string spectral_record_to_json(const SpectralRecord& rec);
SpectralRecord spectral_record_from_json(const std::string& text);

}  // namespace aam
