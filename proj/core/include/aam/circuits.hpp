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

#include <string>
#include <vector>

#include "aam/qcore.hpp"

namespace aam {

enum class GateKind {
  pauli_x,
  pauli_y,
  pauli_z,
  hadamard,
  rot_x,  // exp(-i angle X / 2)
  rot_y,
  rot_z,
  cnot,       // flips target when control is |1>
  anti_cnot,  // flips target when control is |0>
  controlled_u,
  raw_unitary
};

const char* gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

struct Gate {
  GateKind kind;
  std::vector<int> targets;  // operand qubits; excludes the control
  int control = -1;          // cnot / anti_cnot / controlled_u only
  double angle = 0.0;        // rotations only
  Matrix matrix;             // controlled_u / raw_unitary payload
  int active_on = 1;         // controlled_u trigger value

  static Gate x(int q);
  static Gate y(int q);
  static Gate z(int q);
  static Gate h(int q);
  static Gate rx(int q, double angle);
  static Gate ry(int q, double angle);
  static Gate rz(int q, double angle);
  static Gate cnot_gate(int control, int target);
  static Gate anti_cnot_gate(int control, int target);
  static Gate controlled(int control, std::vector<int> targets, Matrix u,
                         int active_on = 1);
  static Gate raw(std::vector<int> targets, Matrix u);
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n);
  // Validates indices against n_qubits; returns *this for chaining.
  Circuit& add(Gate g);
};

// Unembedded matrix of a gate on its own operand space (control excluded
// for controlled kinds, which expose their payload block).
Matrix gate_local_matrix(const Gate& g);

// Gate embedded into the full register.
Matrix gate_full_matrix(const Gate& g, int n_qubits);

// Product of gate embeddings; the first gate in the list acts first, i.e.
// compile({g1, g2}) = embed(g2) * embed(g1).
UnitaryMatrix compile(const Circuit& c);

UnitaryMatrix cnot_matrix(int control, int target, int n_qubits);
// Complement-controlled NOT: flips `target` when `control` is |0>.
UnitaryMatrix anti_cnot_matrix(int control, int target, int n_qubits);

// Block-diagonal unitary sum_a blocks[a] (x) |a><a| with the ancilla on the
// least significant qubits; blocks.size() must be a power of two and every
// block a unitary of one common dimension.
UnitaryMatrix controlled_block(const std::vector<Matrix>& blocks);

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

}  // namespace aam
