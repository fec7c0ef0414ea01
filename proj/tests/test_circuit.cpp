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

#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rckit/circuit.hpp"
#include "rckit/errors.hpp"

using namespace rckit;

namespace {

constexpr double kPi = 3.14159265358979323846;

Cycle all_identity_easy(int n) {
  Cycle c;
  c.kind = CycleKind::Easy;
  for (int q = 0; q < n; ++q) c.gates.push_back(Gate::single(GateName::I, q));
  return c;
}

}  // namespace

TEST_CASE("circuit_unitary: identity and single-gate circuits") {
  Circuit c;
  c.n = 2;
  c.cycles.push_back(all_identity_easy(2));
  CHECK((circuit_unitary(c) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);

  Circuit h;
  h.n = 1;
  Cycle cy;
  cy.kind = CycleKind::Easy;
  cy.gates.push_back(Gate::single(GateName::H, 0));
  h.cycles.push_back(cy);
  CHECK((circuit_unitary(h) - gate_matrix(Gate::single(GateName::H, 0))).cwiseAbs().maxCoeff() <
        1e-15);
}

TEST_CASE("validate_circuit rejects malformed circuits") {
  Circuit c;
  c.n = 2;
  c.cycles.push_back(all_identity_easy(2));
  Cycle hard;
  hard.kind = CycleKind::Hard;
  hard.gates.push_back(Gate::two(GateName::CX, 0, 1));
  c.cycles.push_back(hard);
  // missing trailing easy cycle
  CHECK_THROWS_AS(validate_circuit(c), ValidationError);
  c.cycles.push_back(all_identity_easy(2));
  CHECK_NOTHROW(validate_circuit(c));

  // uncovered qubit
  Circuit bad;
  bad.n = 2;
  Cycle partial;
  partial.kind = CycleKind::Easy;
  partial.gates.push_back(Gate::single(GateName::H, 0));
  bad.cycles.push_back(partial);
  CHECK_THROWS_AS(validate_circuit(bad), ValidationError);
}

TEST_CASE("build_qft: n=1 is a single Hadamard") {
  Circuit c = build_qft(1);
  CHECK(c.cycles.size() == 1);
  CHECK(c.cycles[0].gates.size() == 1);
  CHECK(c.cycles[0].gates[0].name == GateName::H);
  CHECK_THROWS_AS(build_qft(0), ValidationError);
  CHECK_THROWS_AS(build_qft(6), ValidationError);
}

TEST_CASE("build_qft matches the DFT matrix up to qubit reversal and phase") {
  for (int n = 2; n <= 4; ++n) {
    Circuit c = build_qft(n);
    validate_circuit(c);
    Matrix u = circuit_unitary(c);
    Matrix expect = oracles::bit_reversal(n) * oracles::dft_matrix(n);
    CHECK(oracles::max_dev_up_to_phase(u, expect) < 1e-9);
  }
}

TEST_CASE("build_qft on |0...0> gives the uniform distribution") {
  Circuit c = build_qft(4);
  Matrix u = circuit_unitary(c);
  for (int x = 0; x < 16; ++x) CHECK(std::norm(u(x, 0)) == doctest::Approx(1.0 / 16).epsilon(1e-9));
}

TEST_CASE("sample_random_circuit: determinism and structure") {
  std::mt19937_64 rng1(99), rng2(99);
  Circuit a = sample_random_circuit(4, 10, RandomCircuitMode::MultiQubit, rng1);
  Circuit b = sample_random_circuit(4, 10, RandomCircuitMode::MultiQubit, rng2);
  CHECK(circuit_to_json(a) == circuit_to_json(b));
  CHECK(a.hard_cycle_count() == 10);
  CHECK(a.cycles.size() == 21);

  CHECK_THROWS_AS(sample_random_circuit(4, 0, RandomCircuitMode::MultiQubit, rng1),
                  ValidationError);

  std::mt19937_64 rng3(123);
  for (int trial = 0; trial < 100; ++trial) {
    Circuit c = sample_random_circuit(4, 6, RandomCircuitMode::MultiQubit, rng3);
    for (const auto& cycle : c.cycles) {
      if (cycle.kind != CycleKind::Hard) continue;
      int two_qubit = 0;
      for (const auto& g : cycle.gates) {
        if (is_two_qubit(g.name)) {
          ++two_qubit;
          CHECK(std::abs(g.qubits[0] - g.qubits[1]) == 1);  // nearest neighbors
        }
      }
      CHECK(two_qubit == 1);
    }
  }
}

TEST_CASE("sample_random_circuit: hard gate names are uniform (chi-square)") {
  std::mt19937_64 rng(2024);
  std::map<GateName, int> counts;
  int total = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Circuit c = sample_random_circuit(4, 5, RandomCircuitMode::MultiQubit, rng);
    for (const auto& cycle : c.cycles) {
      if (cycle.kind != CycleKind::Hard) continue;
      for (const auto& g : cycle.gates)
        if (is_two_qubit(g.name)) {
          ++counts[g.name];
          ++total;
        }
    }
  }
  double expect = total / 3.0;
  double sigma = std::sqrt(total * (1.0 / 3) * (2.0 / 3));
  for (GateName name : {GateName::CX, GateName::CY, GateName::CZ}) {
    CHECK(std::abs(counts[name] - expect) < 3 * sigma);
  }
}

TEST_CASE("recompile_cycle_pair folds corrections exactly") {
  // X then X -> I
  Cycle x_cycle;
  x_cycle.kind = CycleKind::Easy;
  x_cycle.gates.push_back(Gate::single(GateName::X, 0));
  Cycle folded =
      recompile_cycle_pair(x_cycle, {gate_matrix(Gate::single(GateName::X, 0))}, 1);
  CHECK(folded.gates[0].name == GateName::I);

  // Z twirl into H -> U3 equal to H*Z up to global phase
  Cycle h_cycle;
  h_cycle.kind = CycleKind::Easy;
  h_cycle.gates.push_back(Gate::single(GateName::H, 0));
  Cycle hz = recompile_cycle_pair(h_cycle, {gate_matrix(Gate::single(GateName::Z, 0))}, 1);
  Matrix want = gate_matrix(Gate::single(GateName::H, 0)) * gate_matrix(Gate::single(GateName::Z, 0));
  CHECK(oracles::max_dev_up_to_phase(gate_matrix(hz.gates[0]), want) < 1e-12);

  // T-correction G T† G† for G = X45, recovered through the ZYZ decomposition
  Matrix g = rx_matrix(kPi / 4);
  Matrix corr = g * gate_matrix(Gate::single(GateName::T, 0)).adjoint() * g.adjoint();
  Cycle id_cycle = recompile_cycle_pair(
      [] {
        Cycle c;
        c.kind = CycleKind::Easy;
        c.gates.push_back(Gate::single(GateName::I, 0));
        return c;
      }(),
      {corr}, 1);
  CHECK(oracles::max_dev_up_to_phase(gate_matrix(id_cycle.gates[0]), corr) < 1e-12);
}

TEST_CASE("fold_easy_cycle preserves the cycle unitary up to phase") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    Circuit c = sample_random_circuit(std::max(n, 2), 1, RandomCircuitMode::MultiQubit, rng);
    const Cycle& easy = c.cycles[0];
    int m = std::max(n, 2);
    std::vector<Matrix> pre, post;
    for (int q = 0; q < m; ++q) {
      pre.push_back(oracles::random_unitary(2, rng));
      post.push_back(oracles::random_unitary(2, rng));
    }
    Cycle folded = fold_easy_cycle(easy, pre, post, m);
    Matrix lhs = cycle_unitary(folded, m);
    Matrix rhs = Matrix::Identity(1 << m, 1 << m);
    for (int q = 0; q < m; ++q) rhs = embed(pre[static_cast<std::size_t>(q)], {q}, m) * rhs;
    rhs = cycle_unitary(easy, m) * rhs;
    for (int q = 0; q < m; ++q) rhs = embed(post[static_cast<std::size_t>(q)], {q}, m) * rhs;
    CHECK(oracles::max_dev_up_to_phase(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("recompile_to_cx preserves the circuit unitary") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = sample_random_circuit(3, 4, RandomCircuitMode::MultiQubit, rng);
    Circuit cx = recompile_to_cx(c);
    CHECK(oracles::max_dev_up_to_phase(circuit_unitary(cx), circuit_unitary(c)) < 1e-9);
    for (const auto& cycle : cx.cycles) {
      if (cycle.kind != CycleKind::Hard) continue;
      for (const auto& g : cycle.gates)
        if (is_two_qubit(g.name)) CHECK(g.name == GateName::CX);
    }
    CHECK(cx.cycles.size() == c.cycles.size());
  }
}

TEST_CASE("cycle_signature is canonical") {
  Cycle hard;
  hard.kind = CycleKind::Hard;
  hard.gates.push_back(Gate::single(GateName::I, 3));
  hard.gates.push_back(Gate::two(GateName::CX, 1, 0));
  hard.gates.push_back(Gate::single(GateName::I, 2));
  CHECK(cycle_signature(hard) == "CX(1,0);I(2);I(3)");
}

TEST_CASE("circuit json roundtrip is lossless") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = sample_random_circuit(3, 5, RandomCircuitMode::MultiQubit, rng);
    Circuit back = circuit_from_json(circuit_to_json(c));
    REQUIRE(back.cycles.size() == c.cycles.size());
    CHECK(back.n == c.n);
    for (std::size_t i = 0; i < c.cycles.size(); ++i) {
      REQUIRE(back.cycles[i].gates.size() == c.cycles[i].gates.size());
      CHECK(back.cycles[i].kind == c.cycles[i].kind);
      for (std::size_t j = 0; j < c.cycles[i].gates.size(); ++j) {
        const Gate& a = c.cycles[i].gates[j];
        const Gate& b = back.cycles[i].gates[j];
        CHECK(a.name == b.name);
        CHECK(a.qubits == b.qubits);
        REQUIRE(a.params.size() == b.params.size());
        for (std::size_t k = 0; k < a.params.size(); ++k) CHECK(a.params[k] == b.params[k]);
      }
    }
  }
}

TEST_CASE("clifford_conjugate walks a whole hard cycle") {
  Cycle hard;
  hard.kind = CycleKind::Hard;
  hard.gates.push_back(Gate::two(GateName::CZ, 0, 1));
  hard.gates.push_back(Gate::single(GateName::I, 2));
  PauliString p = PauliString::from_label("XIZ");
  PauliString got = clifford_conjugate(hard, p);
  Matrix g = cycle_unitary(hard, 3);
  auto [want_idx, want_sign] = oracles::match_signed_pauli(g * p.dense() * g.adjoint(), 3);
  CHECK(got.index() == want_idx);
  CHECK(std::abs(got.sign() - want_sign) < 1e-12);

  Cycle bad;
  bad.kind = CycleKind::Hard;
  bad.gates.push_back(Gate::single(GateName::T, 0));
  CHECK_THROWS_AS(clifford_conjugate(bad, PauliString::from_label("X")),
                  UnsupportedConjugationError);
}
