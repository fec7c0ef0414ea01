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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rckit/errors.hpp"
#include "rckit/rc.hpp"
#include "rckit/rng.hpp"
#include "rckit/simulate.hpp"

using namespace rckit;

namespace {

Cycle identity_cycle(int n, CycleKind kind) {
  Cycle c;
  c.kind = kind;
  for (int q = 0; q < n; ++q) c.gates.push_back(Gate::single(GateName::I, q));
  return c;
}

Circuit one_hard_circuit(int n, Cycle hard) {
  Circuit c;
  c.n = n;
  c.cycles.push_back(identity_cycle(n, CycleKind::Easy));
  c.cycles.push_back(std::move(hard));
  c.cycles.push_back(identity_cycle(n, CycleKind::Easy));
  return c;
}

double purity_of(const Matrix& rho) { return (rho * rho).trace().real(); }

double tvd_raw(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return 0.5 * (a - b).cwiseAbs().sum();
}

NoiseModel single_rule_model(const Circuit& c, std::vector<NoiseBody> bodies) {
  NoiseModel nm;
  for (const auto& cycle : c.cycles)
    if (cycle.kind == CycleKind::Hard) nm.add_cycle_rule(cycle_signature(cycle), bodies);
  return nm;
}

}  // namespace

TEST_CASE("simulate: noiseless circuits give pure states") {
  std::mt19937_64 rng(2);
  Circuit c = sample_random_circuit(3, 4, RandomCircuitMode::MultiQubit, rng);
  Matrix rho = simulate_ideal(c);
  Matrix u = circuit_unitary(c);
  Matrix expect = u.col(0) * u.col(0).adjoint();
  CHECK((rho - expect).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(purity_of(rho) == doctest::Approx(1.0));
  CHECK(rho.trace().real() == doctest::Approx(1.0));
}

TEST_CASE("simulate: per-qubit depolarizing fixed point") {
  const int n = 3;
  const double eps = 0.2;  // rho -> (1-eps) rho + eps I/2 per qubit
  Circuit c = one_hard_circuit(n, identity_cycle(n, CycleKind::Hard));
  PauliProbabilityVector q{1, Eigen::Vector4d(1 - 0.75 * eps, eps / 4, eps / 4, eps / 4)};
  std::vector<NoiseBody> bodies;
  for (int qi = 0; qi < n; ++qi)
    bodies.push_back(NoiseBody::make({qi}, q, Eigen::Vector3d::Zero()));
  NoiseModel nm = single_rule_model(c, bodies);

  Matrix rho = simulate(c, nm);
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  // off-diagonals stay zero and the ground-state fidelity factorizes
  double expect = std::pow(1 - eps / 2, n);
  CHECK(rho(0, 0).real() == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("simulate: coherent error rotates the Bloch vector, purity 1") {
  Circuit c = one_hard_circuit(1, identity_cycle(1, CycleKind::Hard));
  // prepare |+> in the first easy cycle
  c.cycles[0].gates[0] = Gate::single(GateName::H, 0);
  double theta = 0.2;
  NoiseModel nm = single_rule_model(
      c, {NoiseBody::make({0}, PauliProbabilityVector{1, Eigen::Vector4d(1, 0, 0, 0)},
                          Eigen::Vector3d(0, 0, theta / 2))});
  Matrix rho = simulate(c, nm);
  CHECK(purity_of(rho) == doctest::Approx(1.0).epsilon(1e-12));
  Matrix x = PauliString::from_label("X").dense();
  Matrix y = PauliString::from_label("Y").dense();
  CHECK((rho * x).trace().real() == doctest::Approx(std::cos(theta)));
  CHECK((rho * y).trace().real() == doctest::Approx(std::sin(theta)));
}

TEST_CASE("simulate: missing cycle rule throws, defaults fill in") {
  Circuit c = one_hard_circuit(2, [] {
    Cycle hard;
    hard.kind = CycleKind::Hard;
    hard.gates.push_back(Gate::two(GateName::CX, 1, 0));
    return hard;
  }());
  NoiseModel empty;
  CHECK_THROWS_AS(simulate(c, empty), ValidationError);

  NoiseModel with_defaults;
  PauliProbabilityVector q{1, Eigen::Vector4d(0.95, 0.05, 0, 0)};
  for (int qi = 0; qi < 2; ++qi)
    with_defaults.set_default_body(qi, NoiseBody::make({qi}, q, Eigen::Vector3d::Zero()));
  CHECK_NOTHROW(simulate(c, with_defaults));
}

TEST_CASE("simulate: purity never increases under Pauli noise") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = sample_random_circuit(2, 3, RandomCircuitMode::MultiQubit, rng);
    Eigen::VectorXd qv = oracles::random_simplex_vector(4, rng);
    PauliProbabilityVector q{1, qv};
    NoiseModel nm;
    for (int qi = 0; qi < 2; ++qi)
      nm.set_default_body(qi, NoiseBody::make({qi}, q, Eigen::Vector3d::Zero()));
    SimEngine engine(&nm, 2);
    // track purity cycle by cycle via prefixes
    double last = 1.0;
    for (std::size_t len = 1; len <= c.cycles.size(); len += 2) {
      Circuit prefix;
      prefix.n = c.n;
      prefix.cycles.assign(c.cycles.begin(), c.cycles.begin() + static_cast<long>(len));
      double p = purity_of(engine.run(prefix));
      CHECK(p <= last + 1e-10);
      last = p;
    }
  }
}

TEST_CASE("exact twirl average equals the Pauli-twirled channel") {
  std::mt19937_64 rng(47);
  for (int n = 1; n <= 2; ++n) {
    Cycle hard;
    hard.kind = CycleKind::Hard;
    if (n == 2) {
      hard.gates.push_back(Gate::two(GateName::CX, 0, 1));
    } else {
      hard.gates.push_back(Gate::single(GateName::H, 0));
    }
    Circuit c = one_hard_circuit(n, hard);
    // some structure in the easy cycles
    c.cycles[0].gates[0] = Gate::single(GateName::H, 0);

    Channel noise = Channel::from_kraus(n, oracles::random_cptp_kraus(1 << n, 3, rng));
    std::vector<int> all_qubits;
    for (int q = 0; q < n; ++q) all_qubits.push_back(q);
    NoiseModel nm = single_rule_model(c, {NoiseBody::from_channel(all_qubits, noise)});
    NoiseModel nm_twirled =
        single_rule_model(c, {NoiseBody::from_channel(all_qubits, noise.pauli_twirled())});

    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix avg = Matrix::Zero(dim, dim);
    const std::size_t count = std::size_t{1} << (2 * n);
    for (std::size_t t = 0; t < count; ++t) {
      auto rc = apply_twirls(c, {PauliString::from_index(n, t)});
      avg += simulate(rc.compiled, nm);
    }
    avg /= static_cast<double>(count);

    Matrix direct = simulate(c, nm_twirled);
    CHECK((avg - direct).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("measure_distribution: readout confusion") {
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = 1;
  ProbDist perfect = measure_distribution(rho, {});
  CHECK(perfect.probs[0] == doctest::Approx(1.0));

  // Q4-style readout: P(0|0) = 0.9969
  ProbDist noisy = measure_distribution(rho, {ReadoutConfusion{0.9969, 0.9872}});
  CHECK(noisy.probs[1] == doctest::Approx(0.0031));
  CHECK(noisy.probs.sum() == doctest::Approx(1.0));

  std::mt19937_64 rng(3);
  Matrix rho2 = oracles::random_density_matrix(4, rng);
  ProbDist out = measure_distribution(
      rho2, {ReadoutConfusion{0.98, 0.95}, ReadoutConfusion{0.99, 0.97}});
  CHECK(out.probs.sum() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(out.probs.minCoeff() >= 0.0);

  CHECK_THROWS_AS(measure_distribution(rho, {ReadoutConfusion{1.2, 0.9}}), ValidationError);
}

TEST_CASE("sample_counts: edge cases and multinomial concentration") {
  std::mt19937_64 rng(5);
  ProbDist point{2, Eigen::Vector4d(0, 0, 1, 0)};
  CHECK_THROWS_AS(sample_counts(point, 0, rng), ValidationError);
  CountDist all = sample_counts(point, 500, rng);
  CHECK(all.counts[2] == 500);

  const int n = 3;
  Circuit c = build_qft(n);
  ProbDist d = measure_distribution(simulate_ideal(c), {});
  const uint64_t shots = 100000;
  CountDist counts = sample_counts(d, shots, rng);
  CHECK(counts.shots == shots);
  uint64_t total = 0;
  for (auto v : counts.counts) total += v;
  CHECK(total == shots);
  double dist = tvd_raw(counts_to_probs(counts).probs, d.probs);
  CHECK(dist < 3 * std::sqrt(static_cast<double>(1 << n) / static_cast<double>(shots)));
}

TEST_CASE("union_counts: totals and mismatches") {
  std::mt19937_64 rng(6);
  ProbDist d{1, Eigen::Vector2d(0.5, 0.5)};
  CountDist a = sample_counts(d, 200, rng);
  CHECK(union_counts({a}).shots == 200);

  std::vector<CountDist> parts;
  for (int i = 0; i < 20; ++i) parts.push_back(sample_counts(d, 200, rng));
  CountDist u = union_counts(parts);
  CHECK(u.shots == 4000);

  CountDist doubled = union_counts({a, a});
  for (std::size_t i = 0; i < a.counts.size(); ++i) CHECK(doubled.counts[i] == 2 * a.counts[i]);

  CountDist other{2, {0, 0, 0, 0}, 0};
  CHECK_THROWS_AS(union_counts({a, other}), ValidationError);
}

TEST_CASE("noise model json roundtrip") {
  NoiseModel nm;
  PauliProbabilityVector q1{1, Eigen::Vector4d(0.99, 0.004, 0.003, 0.003)};
  Eigen::Vector3d h1(0.01, -0.02, 0.005);
  std::mt19937_64 rng(9);
  Eigen::VectorXd q2v = oracles::random_simplex_vector(16, rng);
  PauliProbabilityVector q2{2, q2v};
  Eigen::VectorXd h2 = Eigen::VectorXd::Zero(15);
  h2[3] = 0.04;

  NoiseBody pair = NoiseBody::make({0, 1}, q2, h2);
  pair.target_d = walsh_hadamard(q2).p;
  pair.target_u = 0.9;
  pair.residual = 1e-12;
  nm.add_cycle_rule("CX(1,0);I(2)", {pair, NoiseBody::make({2}, q1, h1)});
  nm.set_default_body(0, NoiseBody::make({0}, q1, h1));
  nm.set_default_body(1, NoiseBody::make({1}, q1, h1));
  nm.set_default_body(2, NoiseBody::make({2}, q1, h1));
  nm.set_readout({{0.9969, 0.9872}, {0.997, 0.9862}, {0.9973, 0.9786}});

  NoiseModel back = noise_model_from_json(noise_model_to_json(nm));
  REQUIRE(back.cycle_rules().size() == 1);
  const auto& bodies = back.cycle_rules().begin()->second;
  REQUIRE(bodies.size() == 2);
  CHECK((bodies[0].q->c - q2.c).cwiseAbs().maxCoeff() == 0.0);
  CHECK((*bodies[0].h - h2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(bodies[0].target_u == doctest::Approx(0.9));
  CHECK((bodies[0].channel.ptm().m - pair.channel.ptm().m).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(back.readout().size() == 3);
  CHECK(back.readout_for(1).p00 == doctest::Approx(0.997));
  CHECK(back.readout_for(7).p00 == doctest::Approx(1.0));  // out of range -> perfect
}
