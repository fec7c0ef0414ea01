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

#include "rckit/rc.hpp"

#include <algorithm>

#include "rckit/errors.hpp"
#include "rckit/rng.hpp"

namespace rckit {

namespace {

enum class HardKind { Clifford, SingleQubitTensor };

HardKind classify_hard_cycle(const Cycle& cycle) {
  bool all_clifford = true;
  bool all_single = true;
  for (const auto& g : cycle.gates) {
    if (!is_clifford(g.name)) all_clifford = false;
    if (is_two_qubit(g.name)) all_single = false;
  }
  if (all_clifford) return HardKind::Clifford;
  if (all_single) return HardKind::SingleQubitTensor;
  throw UnsupportedHardCycleError(
      "randomize: hard cycle is neither Clifford nor a tensor of single-qubit gates");
}

// Per-qubit dense factors of a Pauli label; the overall sign is a global
// phase and is dropped here.
std::vector<Matrix> pauli_factors(const PauliString& p) {
  std::vector<Matrix> out;
  std::string label = p.label();
  for (int q = 0; q < p.n(); ++q) {
    out.push_back(PauliString::from_label(std::string(1, label[static_cast<std::size_t>(q)])).dense());
  }
  return out;
}

// Correction T^c = G T G† for a hard cycle of single-qubit gates, computed
// densely per qubit.
std::vector<Matrix> dense_correction(const Cycle& hard, const PauliString& twirl, int n) {
  std::vector<Matrix> factors = pauli_factors(twirl);
  std::vector<Matrix> out(static_cast<std::size_t>(n));
  for (const auto& g : hard.gates) {
    int q = g.qubits.at(0);
    Matrix gm = gate_matrix(g);
    out[static_cast<std::size_t>(q)] = gm * factors[static_cast<std::size_t>(q)] * gm.adjoint();
  }
  return out;
}

}  // namespace

RandomizedCircuit apply_twirls(const Circuit& c, const std::vector<PauliString>& twirls) {
  validate_circuit(c);
  const int k = c.hard_cycle_count();
  if (static_cast<int>(twirls.size()) != k)
    throw ValidationError("apply_twirls: need exactly one twirl per hard cycle");

  RandomizedCircuit out;
  out.base = c;
  out.twirls = twirls;
  out.compiled = c;

  std::vector<Matrix> pending_pre;  // correction flowing into the next easy cycle
  int hard_index = 0;
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    const Cycle& cycle = c.cycles[i];
    if (cycle.kind == CycleKind::Hard) {
      const PauliString& t = twirls[static_cast<std::size_t>(hard_index)];
      switch (classify_hard_cycle(cycle)) {
        case HardKind::Clifford:
          pending_pre = pauli_factors(clifford_conjugate(cycle, t));
          break;
        case HardKind::SingleQubitTensor:
          pending_pre = dense_correction(cycle, t, c.n);
          break;
      }
      ++hard_index;
      continue;
    }
    std::vector<Matrix> post;
    if (hard_index < k) post = pauli_factors(twirls[static_cast<std::size_t>(hard_index)]);
    out.compiled.cycles[i] = fold_easy_cycle(cycle, pending_pre, post, c.n);
    pending_pre.clear();
  }
  return out;
}

RandomizedCircuit randomize(const Circuit& c, std::mt19937_64& rng) {
  validate_circuit(c);
  std::vector<PauliString> twirls;
  for (int i = 0; i < c.hard_cycle_count(); ++i)
    twirls.push_back(PauliString::sample_uniform(c.n, rng));
  return apply_twirls(c, twirls);
}

std::vector<RandomizedCircuit> randomize_batch(const Circuit& c, int count, uint64_t seed) {
  if (count < 1) throw ValidationError("randomize_batch: count must be >= 1");
  std::vector<RandomizedCircuit> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng = child_rng(seed, static_cast<uint64_t>(i));
    out.push_back(randomize(c, rng));
  }
  return out;
}

EquivalenceResult verify_equivalence(const Circuit& a, const Circuit& b) {
  if (a.n != b.n) throw ValidationError("verify_equivalence: dimension mismatch");
  Matrix ua = circuit_unitary(a);
  Matrix ub = circuit_unitary(b);
  Eigen::Index bi = 0, bj = 0;
  ub.cwiseAbs().maxCoeff(&bi, &bj);
  Complex phase = ua(bi, bj) / ub(bi, bj);
  double mag = std::abs(phase);
  EquivalenceResult r;
  if (mag < 1e-15) {
    r.max_deviation = 1.0;
    return r;
  }
  phase /= mag;
  r.max_deviation = (ua - phase * ub).cwiseAbs().maxCoeff();
  r.equivalent = r.max_deviation < 1e-9;
  return r;
}

}  // namespace rckit
