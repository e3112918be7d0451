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

#include "util.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "aam/rng.hpp"
#include "json_util.hpp"

namespace aamcli {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(long v) { return std::to_string(v); }
std::string fmt(int v) { return std::to_string(v); }

namespace {

double parse_plain(const std::string& text, const std::string& whole) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse number '" + whole + "'");
  }
  if (used != text.size())
    throw std::invalid_argument("trailing characters in number '" + whole +
                                "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty number");

  const size_t pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return parse_plain(s, text);

  std::string coef = s.substr(0, pi_pos);
  std::string rest = s.substr(pi_pos + 2);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double value = M_PI;
  if (coef == "-")
    value = -value;
  else if (!coef.empty() && coef != "+")
    value *= parse_plain(coef, text);
  if (!rest.empty()) {
    if (rest.front() != '/')
      throw std::invalid_argument("trailing characters in number '" + text +
                                  "'");
    const double den = parse_plain(rest.substr(1), text);
    if (den == 0.0) throw std::invalid_argument("division by zero in '" +
                                                text + "'");
    value /= den;
  }
  return value;
}

std::vector<double> parse_grid(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3)
    throw std::invalid_argument("grid '" + text +
                                "' must be start:end:count");
  const double start = parse_angle(parts[0]);
  const double end = parse_angle(parts[1]);
  long count = 0;
  try {
    count = std::stol(parts[2]);
  } catch (const std::exception&) {
    throw std::invalid_argument("grid count '" + parts[2] +
                                "' is not an integer");
  }
  if (count < 1) throw std::invalid_argument("grid count must be >= 1");
  std::vector<double> grid(static_cast<size_t>(count));
  if (count == 1) {
    grid[0] = start;
  } else {
    for (long i = 0; i < count; ++i)
      grid[size_t(i)] = start + (end - start) * double(i) / double(count - 1);
  }
  return grid;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  for (const std::string& part : split(text, ','))
    values.push_back(parse_angle(part));
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

aam::DensityMatrix make_state(const std::string& spec, int n_qubits,
                              std::uint64_t seed) {
  const aam::Index dim = aam::Index(1) << n_qubits;
  if (spec == "mixed") return aam::DensityMatrix::maximally_mixed(dim);
  if (spec == "zero") return aam::DensityMatrix::basis(dim, 0);
  if (spec == "one") return aam::DensityMatrix::basis(dim, dim - 1);
  if (spec == "plus") {
    aam::Vector psi = aam::Vector::Constant(dim, 1.0 / std::sqrt(double(dim)));
    return aam::DensityMatrix::pure(psi);
  }
  if (spec == "ghz") {
    aam::Vector psi = aam::Vector::Zero(dim);
    psi(0) = psi(dim - 1) = 1.0 / std::sqrt(2.0);
    return aam::DensityMatrix::pure(psi);
  }
  if (spec == "random")
    return aam::random_density_matrix(dim, aam::mix_seed(seed, {0x737461ULL}));
  const nlohmann::json j = aam::detail::parse_json(read_file(spec), spec);
  const aam::Matrix m = aam::detail::decode_json(
      spec, [&j] { return aam::detail::matrix_from_json(j); });
  if (m.rows() != dim)
    throw std::invalid_argument("state in '" + spec + "' has dimension " +
                                std::to_string(m.rows()) + ", expected " +
                                std::to_string(dim));
  return aam::DensityMatrix(m);
}

aam::Matrix make_operator(const std::string& spec) {
  if (spec == "x") return aam::pauli_x();
  if (spec == "y") return aam::pauli_y();
  if (spec == "z") return aam::pauli_z();
  if (spec == "h") return aam::hadamard();
  const nlohmann::json j = aam::detail::parse_json(read_file(spec), spec);
  return aam::detail::decode_json(
      spec, [&j] { return aam::detail::matrix_from_json(j); });
}

void parallel_for(long total, int threads,
                  const std::function<void(long)>& fn) {
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  const int workers = int(std::min<long>(threads, std::max<long>(total, 1)));
  if (workers == 1) {
    for (long i = 0; i < total; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(size_t(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (long i = w; i < total; i += workers) fn(i);
    });
  for (std::thread& t : pool) t.join();
}

namespace {

void write_text(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

std::string Artifacts::csv_name() const {
  return std::filesystem::path(base + ".csv").filename().string();
}

void Artifacts::csv(const std::vector<std::string>& comments,
                    const std::string& header,
                    const std::vector<std::string>& rows) const {
  std::ostringstream out;
  out << "# config: " << config.dump() << "\n";
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << header << "\n";
  for (const std::string& r : rows) out << r << "\n";
  if (has_out())
    write_text(base + ".csv", out.str());
  else
    std::cout << out.str();
}

void Artifacts::json_result(nlohmann::json payload, bool primary) const {
  payload["config"] = config;
  if (has_out())
    write_text(base + ".json", payload.dump(2) + "\n");
  else if (primary)
    std::cout << payload.dump(2) << "\n";
}

void Artifacts::recipe(const std::vector<std::string>& lines) const {
  if (!has_out()) return;
  std::ostringstream out;
  out << "# plot recipe\n";
  for (const std::string& l : lines) out << l << "\n";
  write_text(base + ".plot.txt", out.str());
}

}  // namespace aamcli
