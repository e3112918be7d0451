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

// Private helpers: nlohmann::json stays out of the installed headers.

#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "aam/qcore.hpp"

namespace aam::detail {

inline nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      entries.push_back({m(i, j).real(), m(i, j).imag()});
  return nlohmann::json{
      {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline Matrix matrix_from_json(const nlohmann::json& j) {
  const Index rows = j.at("rows").get<Index>();
  const Index cols = j.at("cols").get<Index>();
  const auto& entries = j.at("entries");
  if (rows < 1 || cols < 1 || Index(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix JSON: bad shape");
  Matrix m(rows, cols);
  Index k = 0;
  for (Index i = 0; i < rows; ++i)
    for (Index jj = 0; jj < cols; ++jj, ++k)
      m(i, jj) = Complex(entries[size_t(k)].at(0).get<double>(),
                         entries[size_t(k)].at(1).get<double>());
  return m;
}

inline nlohmann::json parse_json(const std::string& text,
                                 const std::string& what) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw std::invalid_argument(what + ": malformed JSON");
  return j;
}

// Missing keys and type mismatches are configuration errors, so library
// exceptions escaping a decoder are rewrapped as std::invalid_argument.
template <typename F>
auto decode_json(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(what + ": " + e.what());
  }
}

}  // namespace aam::detail
