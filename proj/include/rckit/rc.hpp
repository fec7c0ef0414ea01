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

#include <cstdint>
#include <random>
#include <vector>

#include "rckit/circuit.hpp"

namespace rckit {

/// A logically-equivalent randomization of a bare circuit: one random Pauli
/// twirl per hard cycle, inserted before the cycle and undone after it, with
/// everything folded back into the easy cycles.
struct RandomizedCircuit {
  Circuit base;
  std::vector<PauliString> twirls;  // one per hard cycle, in order
  Circuit compiled;
};

// Compiles the given twirls into the circuit. Twirl k is inserted after easy
// cycle k (counting from 0) and its correction G_k T_k G_k† is folded into
// easy cycle k+1; the final easy cycle receives no twirl of its own.
// Corrections use tableau conjugation for Clifford hard cycles and dense
// per-qubit conjugation for hard cycles made of single-qubit gates; anything
// else throws UnsupportedHardCycleError.
RandomizedCircuit apply_twirls(const Circuit& c, const std::vector<PauliString>& twirls);

// Uniform independent twirls for every hard cycle.
RandomizedCircuit randomize(const Circuit& c, std::mt19937_64& rng);

// N independent randomizations with per-index derived seeds; deterministic
// given (seed, count).
std::vector<RandomizedCircuit> randomize_batch(const Circuit& c, int count, uint64_t seed);

struct EquivalenceResult {
  bool equivalent = false;
  double max_deviation = 0.0;
};

// true iff max |U_a - e^{i phi} U_b| < 1e-9 with phi taken from the
// largest-magnitude entry of U_b. Requires matching n <= 6.
EquivalenceResult verify_equivalence(const Circuit& a, const Circuit& b);

}  // namespace rckit
