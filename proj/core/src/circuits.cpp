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

#include "aam/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "json_util.hpp"

namespace aam {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool has_control(GateKind k) {
  return k == GateKind::cnot || k == GateKind::anti_cnot ||
         k == GateKind::controlled_u;
}

bool has_matrix(GateKind k) {
  return k == GateKind::controlled_u || k == GateKind::raw_unitary;
}

bool has_angle(GateKind k) {
  return k == GateKind::rot_x || k == GateKind::rot_y || k == GateKind::rot_z;
}

Gate make_single(GateKind kind, int q, double angle = 0.0) {
  require(q >= 0, "gate: negative qubit index");
  Gate g;
  g.kind = kind;
  g.targets = {q};
  g.angle = angle;
  return g;
}

void validate_gate(const Gate& g) {
  require(!g.targets.empty(), "gate: no targets");
  std::vector<int> ops = g.targets;
  if (has_control(g.kind)) {
    require(g.control >= 0, "gate: missing control");
    ops.push_back(g.control);
  }
  std::sort(ops.begin(), ops.end());
  require(std::adjacent_find(ops.begin(), ops.end()) == ops.end(),
          "gate: operand indices must be distinct");
  require(ops.front() >= 0, "gate: negative qubit index");
  if (has_angle(g.kind))
    require(std::isfinite(g.angle), "gate: non-finite angle");
  if (has_matrix(g.kind)) {
    require(g.matrix.rows() == g.matrix.cols() &&
                g.matrix.rows() == (Index(1) << g.targets.size()),
            "gate: matrix dim does not match target count");
    require(is_unitary(g.matrix, kUnitaryTol), "gate: matrix not unitary");
  }
  if (g.kind == GateKind::controlled_u)
    require(g.active_on == 0 || g.active_on == 1, "gate: active_on not a bit");
  if (g.kind == GateKind::cnot || g.kind == GateKind::anti_cnot)
    require(g.targets.size() == 1, "gate: cnot takes one target");
}

// Rows with the control bit off the trigger value stay identity; the rest get
// `u` embedded on the target qubits.
Matrix controlled_embed(const Matrix& u, int control,
                        const std::vector<int>& targets, int active_on,
                        int n_qubits) {
  const int m = int(targets.size());
  const Index dim = Index(1) << n_qubits;
  const Index sub = Index(1) << m;
  Matrix full = Matrix::Zero(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    if (bit_of(r, control, n_qubits) != active_on) {
      full(r, r) = 1.0;
      continue;
    }
    Index r_sub = 0;
    Index base = r;
    for (int b = 0; b < m; ++b) {
      const int shift = n_qubits - 1 - targets[size_t(b)];
      r_sub |= Index((r >> shift) & 1) << (m - 1 - b);
      base &= ~(Index(1) << shift);
    }
    for (Index c_sub = 0; c_sub < sub; ++c_sub) {
      Index c = base;
      for (int b = 0; b < m; ++b)
        c |= Index(bit_of(c_sub, b, m)) << (n_qubits - 1 - targets[size_t(b)]);
      full(r, c) = u(r_sub, c_sub);
    }
  }
  return full;
}

}  // namespace

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::pauli_x: return "pauli_x";
    case GateKind::pauli_y: return "pauli_y";
    case GateKind::pauli_z: return "pauli_z";
    case GateKind::hadamard: return "hadamard";
    case GateKind::rot_x: return "rot_x";
    case GateKind::rot_y: return "rot_y";
    case GateKind::rot_z: return "rot_z";
    case GateKind::cnot: return "cnot";
    case GateKind::anti_cnot: return "anti_cnot";
    case GateKind::controlled_u: return "controlled_u";
    case GateKind::raw_unitary: return "raw_unitary";
  }
  throw std::invalid_argument("gate_kind_name: bad enum value");
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::pair<const char*, GateKind> table[] = {
      {"pauli_x", GateKind::pauli_x},     {"pauli_y", GateKind::pauli_y},
      {"pauli_z", GateKind::pauli_z},     {"hadamard", GateKind::hadamard},
      {"rot_x", GateKind::rot_x},         {"rot_y", GateKind::rot_y},
      {"rot_z", GateKind::rot_z},         {"cnot", GateKind::cnot},
      {"anti_cnot", GateKind::anti_cnot}, {"controlled_u", GateKind::controlled_u},
      {"raw_unitary", GateKind::raw_unitary}};
  for (const auto& [n, k] : table)
    if (name == n) return k;
  throw std::invalid_argument("unknown gate kind '" + name + "'");
}

Gate Gate::x(int q) { return make_single(GateKind::pauli_x, q); }
Gate Gate::y(int q) { return make_single(GateKind::pauli_y, q); }
Gate Gate::z(int q) { return make_single(GateKind::pauli_z, q); }
Gate Gate::h(int q) { return make_single(GateKind::hadamard, q); }
Gate Gate::rx(int q, double angle) {
  return make_single(GateKind::rot_x, q, angle);
}
Gate Gate::ry(int q, double angle) {
  return make_single(GateKind::rot_y, q, angle);
}
Gate Gate::rz(int q, double angle) {
  return make_single(GateKind::rot_z, q, angle);
}

Gate Gate::cnot_gate(int control, int target) {
  Gate g;
  g.kind = GateKind::cnot;
  g.control = control;
  g.targets = {target};
  validate_gate(g);
  return g;
}

Gate Gate::anti_cnot_gate(int control, int target) {
  Gate g;
  g.kind = GateKind::anti_cnot;
  g.control = control;
  g.targets = {target};
  validate_gate(g);
  return g;
}

Gate Gate::controlled(int control, std::vector<int> targets, Matrix u,
                      int active_on) {
  Gate g;
  g.kind = GateKind::controlled_u;
  g.control = control;
  g.targets = std::move(targets);
  g.matrix = std::move(u);
  g.active_on = active_on;
  validate_gate(g);
  return g;
}

Gate Gate::raw(std::vector<int> targets, Matrix u) {
  Gate g;
  g.kind = GateKind::raw_unitary;
  g.targets = std::move(targets);
  g.matrix = std::move(u);
  validate_gate(g);
  return g;
}

Circuit::Circuit(int n) : n_qubits(n) {
  require(n >= 1 && n <= kMaxQubits, "Circuit: bad qubit count");
}

Circuit& Circuit::add(Gate g) {
  validate_gate(g);
  int max_index = g.control;
  for (int q : g.targets) max_index = std::max(max_index, q);
  require(max_index < n_qubits, "Circuit::add: qubit index out of range");
  gates.push_back(std::move(g));
  return *this;
}

Matrix gate_local_matrix(const Gate& g) {
  switch (g.kind) {
    case GateKind::pauli_x: return pauli_x();
    case GateKind::pauli_y: return pauli_y();
    case GateKind::pauli_z: return pauli_z();
    case GateKind::hadamard: return hadamard();
    case GateKind::rot_x: return rot_x(g.angle);
    case GateKind::rot_y: return rot_y(g.angle);
    case GateKind::rot_z: return rot_z(g.angle);
    case GateKind::cnot:
    case GateKind::anti_cnot: return pauli_x();
    case GateKind::controlled_u:
    case GateKind::raw_unitary: return g.matrix;
  }
  throw std::invalid_argument("gate_local_matrix: bad enum value");
}

Matrix gate_full_matrix(const Gate& g, int n_qubits) {
  validate_gate(g);
  int max_index = g.control;
  for (int q : g.targets) max_index = std::max(max_index, q);
  require(max_index < n_qubits, "gate_full_matrix: qubit index out of range");
  switch (g.kind) {
    case GateKind::cnot:
      return controlled_embed(pauli_x(), g.control, g.targets, 1, n_qubits);
    case GateKind::anti_cnot:
      return controlled_embed(pauli_x(), g.control, g.targets, 0, n_qubits);
    case GateKind::controlled_u:
      return controlled_embed(g.matrix, g.control, g.targets, g.active_on,
                              n_qubits);
    default:
      return embed_operator(gate_local_matrix(g), g.targets, n_qubits);
  }
}

UnitaryMatrix compile(const Circuit& c) {
  require(c.n_qubits >= 1 && c.n_qubits <= kMaxQubits,
          "compile: bad qubit count");
  const Index dim = Index(1) << c.n_qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (const Gate& g : c.gates) u = gate_full_matrix(g, c.n_qubits) * u;
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix cnot_matrix(int control, int target, int n_qubits) {
  return UnitaryMatrix(
      gate_full_matrix(Gate::cnot_gate(control, target), n_qubits));
}

UnitaryMatrix anti_cnot_matrix(int control, int target, int n_qubits) {
  return UnitaryMatrix(
      gate_full_matrix(Gate::anti_cnot_gate(control, target), n_qubits));
}

UnitaryMatrix controlled_block(const std::vector<Matrix>& blocks) {
  require(!blocks.empty(), "controlled_block: no blocks");
  const size_t count = blocks.size();
  require((count & (count - 1)) == 0,
          "controlled_block: block count must be a power of two");
  const Index sub = blocks[0].rows();
  for (const Matrix& b : blocks) {
    require(b.rows() == sub && b.cols() == sub,
            "controlled_block: inconsistent block dimension");
    require(is_unitary(b, kUnitaryTol), "controlled_block: block not unitary");
  }
  const Index anc = Index(count);
  Matrix full = Matrix::Zero(sub * anc, sub * anc);
  for (Index a = 0; a < anc; ++a)
    for (Index i = 0; i < sub; ++i)
      for (Index j = 0; j < sub; ++j)
        full(i * anc + a, j * anc + a) = blocks[size_t(a)](i, j);
  return UnitaryMatrix(std::move(full));
}

std::string circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    nlohmann::json jg{{"kind", gate_kind_name(g.kind)}, {"targets", g.targets}};
    if (has_control(g.kind)) jg["control"] = g.control;
    if (has_angle(g.kind)) jg["angle"] = g.angle;
    if (has_matrix(g.kind)) jg["matrix"] = detail::matrix_to_json(g.matrix);
    if (g.kind == GateKind::controlled_u) jg["active_on"] = g.active_on;
    gates.push_back(std::move(jg));
  }
  return nlohmann::json{{"n_qubits", c.n_qubits}, {"gates", gates}}.dump();
}

Circuit circuit_from_json(const std::string& text) {
  const nlohmann::json j = detail::parse_json(text, "circuit");
  return detail::decode_json("circuit", [&j] {
    Circuit c(j.at("n_qubits").get<int>());
    for (const auto& jg : j.at("gates")) {
      Gate g;
      g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
      g.targets = jg.at("targets").get<std::vector<int>>();
      if (has_control(g.kind)) g.control = jg.at("control").get<int>();
      if (has_angle(g.kind)) g.angle = jg.at("angle").get<double>();
      if (has_matrix(g.kind))
        g.matrix = detail::matrix_from_json(jg.at("matrix"));
      if (g.kind == GateKind::controlled_u && jg.contains("active_on"))
        g.active_on = jg.at("active_on").get<int>();
      c.add(std::move(g));
    }
    return c;
  });
}

}  // namespace aam
