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

#include "rckit/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rckit/errors.hpp"

namespace rckit {

namespace {
constexpr double kPi = 3.14159265358979323846;
using nlohmann::json;
}  // namespace

int Circuit::hard_cycle_count() const {
  int k = 0;
  for (const auto& c : cycles)
    if (c.kind == CycleKind::Hard) ++k;
  return k;
}

void validate_circuit(const Circuit& c) {
  if (c.n < 1 || c.n > 16) throw ValidationError("circuit: bad qubit count");
  if (c.cycles.empty()) throw ValidationError("circuit: no cycles");
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    CycleKind expect = (i % 2 == 0) ? CycleKind::Easy : CycleKind::Hard;
    if (c.cycles[i].kind != expect)
      throw ValidationError("circuit: cycles must alternate easy, hard, ..., easy");
  }
  if (c.cycles.size() % 2 == 0) throw ValidationError("circuit: last cycle must be easy");
  for (const auto& cycle : c.cycles) {
    std::vector<bool> covered(static_cast<std::size_t>(c.n), false);
    int two_qubit_gates = 0;
    for (const auto& g : cycle.gates) {
      bool two = is_two_qubit(g.name);
      if (two) {
        if (cycle.kind == CycleKind::Easy)
          throw ValidationError("circuit: easy cycles hold single-qubit gates only");
        ++two_qubit_gates;
      }
      if (g.qubits.size() != (two ? 2u : 1u))
        throw ValidationError("circuit: wrong qubit count for " + gate_name_str(g.name));
      for (int q : g.qubits) {
        if (q < 0 || q >= c.n) throw ValidationError("circuit: qubit index out of range");
        if (covered[static_cast<std::size_t>(q)])
          throw ValidationError("circuit: overlapping gate supports in one cycle");
        covered[static_cast<std::size_t>(q)] = true;
      }
    }
    if (two_qubit_gates > 1)
      throw ValidationError("circuit: at most one two-qubit gate per hard cycle");
    for (bool b : covered)
      if (!b) throw ValidationError("circuit: cycle does not cover all qubits (add explicit I)");
  }
}

Matrix cycle_unitary(const Cycle& cycle, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& g : cycle.gates) u = embed(gate_matrix(g), g.qubits, n) * u;
  return u;
}

Matrix circuit_unitary(const Circuit& c) {
  if (c.n > 6) throw ValidationError("circuit_unitary: n > 6 unsupported");
  const Eigen::Index dim = Eigen::Index{1} << c.n;
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& cycle : c.cycles) u = cycle_unitary(cycle, c.n) * u;
  return u;
}

std::string cycle_signature(const Cycle& cycle) {
  std::vector<std::string> parts;
  for (const auto& g : cycle.gates) {
    std::ostringstream os;
    os << gate_name_str(g.name) << '(';
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (i) os << ',';
      os << g.qubits[i];
    }
    os << ')';
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ';';
    out += parts[i];
  }
  return out;
}

std::string circuit_to_json(const Circuit& c) {
  json j;
  j["n"] = c.n;
  j["cycles"] = json::array();
  for (const auto& cycle : c.cycles) {
    json jc;
    jc["kind"] = cycle.kind == CycleKind::Easy ? "easy" : "hard";
    jc["gates"] = json::array();
    for (const auto& g : cycle.gates) {
      json jg;
      jg["name"] = gate_name_str(g.name);
      jg["qubits"] = g.qubits;
      jg["params"] = g.params;
      jc["gates"].push_back(jg);
    }
    j["cycles"].push_back(jc);
  }
  return j.dump(2);
}

Circuit circuit_from_json(const std::string& text) {
  json j = json::parse(text);
  Circuit c;
  c.n = j.at("n").get<int>();
  for (const auto& jc : j.at("cycles")) {
    Cycle cycle;
    std::string kind = jc.at("kind").get<std::string>();
    if (kind == "easy") cycle.kind = CycleKind::Easy;
    else if (kind == "hard") cycle.kind = CycleKind::Hard;
    else throw ValidationError("circuit json: bad cycle kind " + kind);
    for (const auto& jg : jc.at("gates")) {
      Gate g;
      g.name = gate_name_from_str(jg.at("name").get<std::string>());
      g.qubits = jg.at("qubits").get<std::vector<int>>();
      g.params = jg.at("params").get<std::vector<double>>();
      cycle.gates.push_back(g);
    }
    c.cycles.push_back(cycle);
  }
  validate_circuit(c);
  return c;
}

namespace {

json gate_to_json(const Gate& g) {
  json jg;
  jg["name"] = gate_name_str(g.name);
  jg["qubits"] = g.qubits;
  jg["params"] = g.params;
  return jg;
}

Gate gate_from_json(const json& jg) {
  Gate g;
  g.name = gate_name_from_str(jg.at("name").get<std::string>());
  g.qubits = jg.at("qubits").get<std::vector<int>>();
  g.params = jg.at("params").get<std::vector<double>>();
  return g;
}

}  // namespace

std::string cycle_to_json(const Cycle& cycle, int n) {
  json j;
  j["n"] = n;
  j["kind"] = cycle.kind == CycleKind::Easy ? "easy" : "hard";
  j["gates"] = json::array();
  for (const auto& g : cycle.gates) j["gates"].push_back(gate_to_json(g));
  return j.dump(2);
}

std::pair<Cycle, int> cycle_from_json(const std::string& text) {
  json j = json::parse(text);
  Cycle cycle;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "easy") cycle.kind = CycleKind::Easy;
  else if (kind == "hard") cycle.kind = CycleKind::Hard;
  else throw ValidationError("cycle json: bad kind " + kind);
  for (const auto& jg : j.at("gates")) cycle.gates.push_back(gate_from_json(jg));
  return {cycle, j.at("n").get<int>()};
}

namespace {

// Incrementally packs a gate stream into alternating easy/hard cycles.
class CyclePacker {
 public:
  explicit CyclePacker(int n) : n_(n), pending_(static_cast<std::size_t>(n)) {}

  void add_single(int q, const Matrix& u) {
    Matrix& acc = pending_[static_cast<std::size_t>(q)];
    acc = acc.size() == 0 ? u : Matrix(u * acc);
  }

  void add_hard(const Gate& g) {
    flush_easy();
    Cycle hard;
    hard.kind = CycleKind::Hard;
    hard.gates.push_back(g);
    for (int q = 0; q < n_; ++q) {
      if (std::find(g.qubits.begin(), g.qubits.end(), q) == g.qubits.end())
        hard.gates.push_back(Gate::single(GateName::I, q));
    }
    out_.push_back(hard);
  }

  Circuit finish() {
    flush_easy();
    Circuit c;
    c.n = n_;
    c.cycles = out_;
    return c;
  }

 private:
  void flush_easy() {
    Cycle easy;
    easy.kind = CycleKind::Easy;
    for (int q = 0; q < n_; ++q) {
      Matrix& acc = pending_[static_cast<std::size_t>(q)];
      easy.gates.push_back(acc.size() == 0 ? Gate::single(GateName::I, q) : fold_to_gate(q, acc));
      acc.resize(0, 0);
    }
    out_.push_back(easy);
  }

  int n_;
  std::vector<Matrix> pending_;
  std::vector<Cycle> out_;
};

}  // namespace

Circuit build_qft(int n) {
  if (n < 1 || n > 5) throw ValidationError("build_qft: n must be in [1, 5]");
  CyclePacker packer(n);
  Matrix h = gate_matrix(Gate::single(GateName::H, 0));
  for (int i = 0; i < n; ++i) {
    packer.add_single(i, h);
    for (int j = i + 1; j < n; ++j) {
      double theta = kPi / std::pow(2.0, j - i);
      // CP(theta) on (control j, target i) as CX, Rz(-theta/2) t, CX,
      // Rz(theta/2) on both.
      packer.add_hard(Gate::two(GateName::CX, j, i));
      packer.add_single(i, rz_matrix(-theta / 2));
      packer.add_hard(Gate::two(GateName::CX, j, i));
      packer.add_single(i, rz_matrix(theta / 2));
      packer.add_single(j, rz_matrix(theta / 2));
    }
  }
  Circuit c = packer.finish();
  validate_circuit(c);
  return c;
}

Circuit sample_random_circuit(int n, int k, RandomCircuitMode mode, std::mt19937_64& rng) {
  if (k < 1) throw ValidationError("sample_random_circuit: K must be >= 1");
  if (mode == RandomCircuitMode::MultiQubit && n < 2)
    throw ValidationError("sample_random_circuit: multi-qubit mode needs n >= 2");

  auto draw_c1 = [&](int q) {
    const auto& table = c1_table();
    return fold_to_gate(q, table[static_cast<std::size_t>(rng() % table.size())]);
  };
  auto easy_cycle = [&]() {
    Cycle cy;
    cy.kind = CycleKind::Easy;
    for (int q = 0; q < n; ++q) {
      if (mode == RandomCircuitMode::SingleQubit) {
        cy.gates.push_back(draw_c1(q));
      } else {
        switch (rng() % 27) {
          case 24: cy.gates.push_back(Gate::single(GateName::X45, q)); break;
          case 25: cy.gates.push_back(Gate::single(GateName::Y45, q)); break;
          case 26: cy.gates.push_back(Gate::single(GateName::T, q)); break;
          default: cy.gates.push_back(draw_c1(q)); break;
        }
      }
    }
    return cy;
  };
  auto hard_cycle = [&]() {
    Cycle cy;
    cy.kind = CycleKind::Hard;
    if (mode == RandomCircuitMode::SingleQubit) {
      static const GateName kHard[3] = {GateName::X45, GateName::Y45, GateName::T};
      for (int q = 0; q < n; ++q) cy.gates.push_back(Gate::single(kHard[rng() % 3], q));
    } else {
      static const GateName kHard[3] = {GateName::CX, GateName::CY, GateName::CZ};
      int low = static_cast<int>(rng() % static_cast<uint64_t>(n - 1));
      cy.gates.push_back(Gate::two(kHard[rng() % 3], low + 1, low));
      for (int q = 0; q < n; ++q)
        if (q != low && q != low + 1) cy.gates.push_back(Gate::single(GateName::I, q));
    }
    return cy;
  };

  Circuit c;
  c.n = n;
  c.cycles.push_back(easy_cycle());
  for (int i = 0; i < k; ++i) {
    c.cycles.push_back(hard_cycle());
    c.cycles.push_back(easy_cycle());
  }
  validate_circuit(c);
  return c;
}

Cycle fold_easy_cycle(const Cycle& easy, const std::vector<Matrix>& pre,
                      const std::vector<Matrix>& post, int n) {
  if (easy.kind != CycleKind::Easy) throw ValidationError("fold_easy_cycle: expected an easy cycle");
  std::vector<Matrix> acc(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    const std::size_t uq = static_cast<std::size_t>(q);
    acc[uq] = (q < static_cast<int>(pre.size()) && pre[uq].size() != 0) ? pre[uq]
                                                                        : Matrix::Identity(2, 2);
  }
  for (const auto& g : easy.gates) {
    const std::size_t uq = static_cast<std::size_t>(g.qubits.at(0));
    acc[uq] = gate_matrix(g) * acc[uq];
  }
  Cycle out;
  out.kind = CycleKind::Easy;
  for (int q = 0; q < n; ++q) {
    const std::size_t uq = static_cast<std::size_t>(q);
    Matrix m = acc[uq];
    if (q < static_cast<int>(post.size()) && post[uq].size() != 0) m = post[uq] * m;
    out.gates.push_back(fold_to_gate(q, m));
  }
  return out;
}

Cycle recompile_cycle_pair(const Cycle& easy, const std::vector<Matrix>& corrections, int n) {
  return fold_easy_cycle(easy, corrections, {}, n);
}

Circuit recompile_to_cx(const Circuit& c) {
  validate_circuit(c);
  Circuit out = c;
  Matrix s = gate_matrix(Gate::single(GateName::S, 0));
  Matrix sdg = gate_matrix(Gate::single(GateName::Sdg, 0));
  Matrix h = gate_matrix(Gate::single(GateName::H, 0));
  for (std::size_t i = 0; i < out.cycles.size(); ++i) {
    Cycle& cycle = out.cycles[i];
    if (cycle.kind != CycleKind::Hard) continue;
    for (auto& g : cycle.gates) {
      if (g.name != GateName::CY && g.name != GateName::CZ) continue;
      int target = g.qubits[1];
      // CY = (I⊗S) CX (I⊗Sdg), CZ = (I⊗H) CX (I⊗H)
      const Matrix& before = g.name == GateName::CY ? sdg : h;
      const Matrix& after = g.name == GateName::CY ? s : h;
      std::vector<Matrix> post(static_cast<std::size_t>(out.n));
      post[static_cast<std::size_t>(target)] = before;
      out.cycles[i - 1] = fold_easy_cycle(out.cycles[i - 1], {}, post, out.n);
      std::vector<Matrix> pre(static_cast<std::size_t>(out.n));
      pre[static_cast<std::size_t>(target)] = after;
      out.cycles[i + 1] = fold_easy_cycle(out.cycles[i + 1], pre, {}, out.n);
      g.name = GateName::CX;
    }
  }
  return out;
}

PauliString clifford_conjugate(const Cycle& cycle, const PauliString& p) {
  PauliString out = p;
  for (const auto& g : cycle.gates) {
    auto kind = clifford_kind_of(g.name);
    if (!kind)
      throw UnsupportedConjugationError("clifford_conjugate: non-Clifford gate " +
                                        gate_name_str(g.name));
    CliffordOp op{*kind, g.qubits[0], g.qubits.size() > 1 ? g.qubits[1] : 0};
    out = conjugate_through(op, out);
  }
  return out;
}

}  // namespace rckit
