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
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aam/qcore.hpp"

namespace aamcli {

// "%.17g": round-trips every double and keeps CSV output byte-stable.
std::string fmt(double v);
std::string fmt(long v);
std::string fmt(int v);

// Scalar angle in radians; accepts plain numbers and pi fractions such as
// "pi", "2pi", "pi/4", "3pi/4", "-pi/2", "0.125".
double parse_angle(const std::string& text);

// "start:end:count" linspace, both ends included; start/end take the
// parse_angle grammar, count >= 1.
std::vector<double> parse_grid(const std::string& text);

// Comma-separated list under the parse_angle grammar.
std::vector<double> parse_list(const std::string& text);

std::string read_file(const std::string& path);

// Named state presets (zero | one | plus | ghz | mixed | random) or a path
// to a matrix JSON file; `seed` feeds the random preset only.
aam::DensityMatrix make_state(const std::string& spec, int n_qubits,
                              std::uint64_t seed);

// Named single-qubit operators (x | y | z | h) or a matrix JSON file path.
aam::Matrix make_operator(const std::string& spec);

// Index-strided worker pool; fn(i) must only touch slot i of its outputs,
// which keeps results independent of the thread count.
void parallel_for(long total, int threads, const std::function<void(long)>& fn);

// ---------------------------------------------------------------------------
// Artifact emission.  With --out BASE the files are BASE.csv, BASE.json and
// BASE.plot.txt; without it the primary artifact goes to stdout and the
// plot recipe is skipped.

struct Artifacts {
  std::string base;        // empty: stdout mode
  nlohmann::json config;   // resolved run config, embedded in every artifact

  bool has_out() const { return !base.empty(); }

  // Basename of the CSV artifact; recipes refer to it by name so the bytes
  // do not depend on where the artifacts live.
  std::string csv_name() const;

  // First line "# config: {...}", optional extra "# key: ..." comments,
  // then the header row and data rows.
  void csv(const std::vector<std::string>& comments, const std::string& header,
           const std::vector<std::string>& rows) const;

  // Payload gains a "config" key.  In stdout mode the payload prints only
  // when `primary` (the command has no CSV artifact).
  void json_result(nlohmann::json payload, bool primary = true) const;

  void recipe(const std::vector<std::string>& lines) const;
};

}  // namespace aamcli
