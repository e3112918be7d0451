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

#include "aam/readout.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "aam/rng.hpp"
#include "json_util.hpp"

namespace aam {

namespace {

// Full-register index with `qubit` set to `bit` and the remaining qubits
// spelling out `others` in register order.
Index line_index(int qubit, std::uint64_t others, int bit, int n) {
  Index idx = Index(bit) << (n - 1 - qubit);
  for (int q = 0; q < n; ++q) {
    if (q == qubit) continue;
    const int pos = (q > qubit) ? q - 1 : q;  // rank among remaining qubits
    idx |= Index((others >> (n - 2 - pos)) & 1) << (n - 1 - q);
  }
  return idx;
}

}  // namespace

std::pair<double, double> transverse_expectations(const DensityMatrix& rho,
                                                  int qubit) {
  const int n = rho.n_qubits();
  if (qubit < 0 || qubit >= n)
    throw std::invalid_argument("transverse_expectations: qubit out of range");
  if (rho.kind() != StateKind::normalized)
    throw std::invalid_argument(
        "transverse_expectations: state must be normalized");
  // <sx> + i<sy> = 2 tr(rho |1><0|_j) = 2 conj(sum of <0|rho|1> lines).
  Complex acc = 0.0;
  const int others_count = 1 << (n - 1);
  for (int b = 0; b < others_count; ++b)
    acc += rho.matrix()(line_index(qubit, std::uint64_t(b), 0, n),
                        line_index(qubit, std::uint64_t(b), 1, n));
  return {2.0 * acc.real(), -2.0 * acc.imag()};
}

SpectralRecord spectrum(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  SpectralRecord rec;
  rec.n_qubits = n;
  rec.amplitudes.reserve(size_t(n) << (n - 1));
  for (int q = 0; q < n; ++q)
    for (std::uint64_t b = 0; b < (std::uint64_t(1) << (n - 1)); ++b)
      rec.amplitudes.push_back(
          {q, b,
           rho.matrix()(line_index(q, b, 0, n), line_index(q, b, 1, n))});
  return rec;
}

SpectralRecord spectrum(const DensityMatrix& rho, double noise_sigma,
                        std::uint64_t seed) {
  if (noise_sigma < 0)
    throw std::invalid_argument("spectrum: noise_sigma must be >= 0");
  SpectralRecord rec = spectrum(rho);
  rec.noise_sigma = noise_sigma;
  rec.seed = seed;
  if (noise_sigma == 0.0) return rec;
  double scale = 0.0;
  for (const SpectralAmplitude& a : rec.amplitudes)
    scale = std::max(scale, std::abs(a.value));
  if (scale == 0.0) scale = 1.0;
  std::mt19937_64 eng = make_engine(seed);
  std::normal_distribution<double> gauss(0.0, noise_sigma * scale);
  for (SpectralAmplitude& a : rec.amplitudes) {
    const double re = gauss(eng);
    const double im = gauss(eng);
    a.value += Complex(re, im);
  }
  return rec;
}

std::vector<double> diagonal_populations(const DensityMatrix& rho) {
  if (rho.kind() != StateKind::normalized)
    throw std::invalid_argument(
        "diagonal_populations: state must be normalized");
  std::vector<double> p(size_t(rho.dim()));
  for (Index i = 0; i < rho.dim(); ++i) p[size_t(i)] = rho.matrix()(i, i).real();
  return p;
}

std::string spectral_record_to_json(const SpectralRecord& rec) {
  nlohmann::json lines = nlohmann::json::array();
  for (const SpectralAmplitude& a : rec.amplitudes)
    lines.push_back({{"qubit", a.qubit},
                     {"others", a.others},
                     {"re", a.value.real()},
                     {"im", a.value.imag()}});
  nlohmann::json j{{"n_qubits", rec.n_qubits},
                   {"amplitudes", lines},
                   {"noise_sigma", rec.noise_sigma}};
  if (rec.seed) j["seed"] = *rec.seed;
  return j.dump();
}

SpectralRecord spectral_record_from_json(const std::string& text) {
  const nlohmann::json j = detail::parse_json(text, "spectral record");
  return detail::decode_json("spectral record", [&j] {
    SpectralRecord rec;
    rec.n_qubits = j.at("n_qubits").get<int>();
    rec.noise_sigma = j.at("noise_sigma").get<double>();
    if (j.contains("seed")) rec.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& ja : j.at("amplitudes"))
      rec.amplitudes.push_back({ja.at("qubit").get<int>(),
                                ja.at("others").get<std::uint64_t>(),
                                Complex(ja.at("re").get<double>(),
                                        ja.at("im").get<double>())});
    const size_t expect = size_t(rec.n_qubits) << (rec.n_qubits - 1);
    if (rec.n_qubits < 1 || rec.amplitudes.size() != expect)
      throw std::invalid_argument("spectral record: amplitude count mismatch");
    return rec;
  });
}

}  // namespace aam
