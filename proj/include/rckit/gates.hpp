// Copyright 2026 The rckit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rckit/pauli.hpp"

namespace rckit {

enum class GateName { I, X, Y, Z, H, S, Sdg, T, X45, Y45, Z45, U3, CX, CY, CZ };

std::string gate_name_str(GateName name);
GateName gate_name_from_str(const std::string& s);
bool is_two_qubit(GateName name);
// Clifford in the conjugation sense: I, X, Y, Z, H, S, Sdg, CX, CY, CZ.
bool is_clifford(GateName name);
std::optional<CliffordKind> clifford_kind_of(GateName name);

/// A placed gate. CX/CY/CZ list (control, target); X45/Y45/Z45 are rotations
/// by pi/4 about the named axis (Z45 equals T up to global phase).
struct Gate {
  GateName name = GateName::I;
  std::vector<int> qubits;
  std::vector<double> params;  // U3 carries (theta, phi, lambda)

  static Gate single(GateName name, int q);
  static Gate u3(int q, double theta, double phi, double lambda);
  static Gate two(GateName name, int control, int target);
};

// The gate's own unitary (2x2 or 4x4, first listed qubit most significant).
Matrix gate_matrix(const Gate& g);

Matrix rx_matrix(double theta);
Matrix ry_matrix(double theta);
Matrix rz_matrix(double theta);
Matrix u3_matrix(double theta, double phi, double lambda);

// ZYZ Euler angles: u3_matrix(theta, phi, lambda) equals u up to global
// phase, max entrywise error ~1e-15.
std::array<double, 3> zyz_angles(const Matrix& u);

// Folds an arbitrary single-qubit unitary into a U3 gate (I when the input
// is the identity up to phase).
Gate fold_to_gate(int q, const Matrix& u);

// The 24 single-qubit Cliffords in a fixed canonical order (sorted by their
// conjugation action on X and Z).
const std::vector<Matrix>& c1_table();

}  // namespace rckit
