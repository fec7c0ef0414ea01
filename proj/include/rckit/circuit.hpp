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

#include <random>
#include <string>
#include <vector>

#include "rckit/gates.hpp"
#include "rckit/pauli.hpp"

namespace rckit {

enum class CycleKind { Easy, Hard };

/// One circuit layer: gates with disjoint supports covering all qubits
/// (idle qubits carry an explicit I).
struct Cycle {
  CycleKind kind = CycleKind::Easy;
  std::vector<Gate> gates;
};

/// Alternating easy/hard cycles: easy, hard, easy, ..., hard, easy.
/// K hard cycles, K+1 easy cycles (K may be zero).
struct Circuit {
  int n = 0;
  std::vector<Cycle> cycles;

  int hard_cycle_count() const;
};

// Throws ValidationError unless the circuit is well formed: alternation,
// coverage, gate arities, qubit ranges.
void validate_circuit(const Circuit& c);

Matrix cycle_unitary(const Cycle& cycle, int n);
// Ordered product of cycle unitaries, earliest cycle applied first (n <= 6).
Matrix circuit_unitary(const Circuit& c);

// Canonical key for a hard cycle: per-gate "name(q0,q1)" strings, sorted and
// joined with ';'. Identity fillers are included.
std::string cycle_signature(const Cycle& cycle);

// JSON round trip, schema: {"n": int, "cycles": [{"kind": ..., "gates":
// [{"name": str, "qubits": [...], "params": [...]}]}]}
std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

// Standalone cycle serialization, {"n": int, "kind": str, "gates": [...]};
// used by the cb/cer file formats.
std::string cycle_to_json(const Cycle& cycle, int n);
std::pair<Cycle, int> cycle_from_json(const std::string& text);

/// Textbook QFT built from H plus controlled-phase gates recompiled to CX
/// and single-qubit rotations, packed into alternating easy/hard form. The
/// unitary equals the DFT matrix with the standard final qubit reversal
/// absorbed as relabeling, up to global phase.
Circuit build_qft(int n);

enum class RandomCircuitMode { MultiQubit, SingleQubit };

/// K interleaved cycles of random easy/hard gates. MultiQubit draws easy
/// gates per qubit from C1 ∪ {X45, Y45, T} and puts one two-qubit gate from
/// {CX, CY, CZ} on a random nearest-neighbor pair per hard cycle (control on
/// the higher-index qubit). SingleQubit draws easy gates from C1 and hard
/// gates per qubit from {X45, Y45, T}.
Circuit sample_random_circuit(int n, int k, RandomCircuitMode mode, std::mt19937_64& rng);

// Folds per-qubit correction unitaries (applied before the cycle's own
// gates) into one U3 per qubit; cycle depth is unchanged.
Cycle recompile_cycle_pair(const Cycle& easy, const std::vector<Matrix>& corrections, int n);

// General fold: per qubit, post * easy * pre. Empty matrices mean identity.
Cycle fold_easy_cycle(const Cycle& easy, const std::vector<Matrix>& pre,
                      const std::vector<Matrix>& post, int n);

// Rewrites CY/CZ hard gates as CX conjugated by single-qubit gates folded
// into the adjacent easy cycles, so noise models keyed on CX cycles apply.
Circuit recompile_to_cx(const Circuit& c);

// G P G† for a Clifford hard cycle. Throws UnsupportedConjugationError when
// the cycle contains a non-Clifford gate.
PauliString clifford_conjugate(const Cycle& cycle, const PauliString& p);

}  // namespace rckit
