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
#include "rckit/metrics.hpp"
#include "rckit/rng.hpp"

using namespace rckit;

namespace {
constexpr double kPi = 3.14159265358979323846;

ProbDist random_dist(int n, std::mt19937_64& rng) {
  return ProbDist{n, oracles::random_simplex_vector(1 << n, rng)};
}
}  // namespace

TEST_CASE("tvd: fixed values") {
  std::mt19937_64 rng(1);
  ProbDist p = random_dist(3, rng);
  CHECK(tvd(p, p) == doctest::Approx(0.0));

  ProbDist a{1, Eigen::Vector2d(1, 0)}, b{1, Eigen::Vector2d(0, 1)};
  CHECK(tvd(a, b) == doctest::Approx(1.0));

  ProbDist point{4, Eigen::VectorXd::Zero(16)};
  point.probs[5] = 1.0;
  ProbDist uniform{4, Eigen::VectorXd::Constant(16, 1.0 / 16)};
  CHECK(tvd(point, uniform) == doctest::Approx(15.0 / 16));
  CHECK(uniformity_distance(point) == doctest::Approx(0.9375));
  CHECK(uniformity_distance(uniform) == doctest::Approx(0.0));

  ProbDist other = random_dist(2, rng);
  CHECK_THROWS_AS(tvd(p, other), ValidationError);
}

TEST_CASE("tvd is a metric on random triples") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    ProbDist p = random_dist(2, rng), q = random_dist(2, rng), r = random_dist(2, rng);
    CHECK(tvd(p, q) == doctest::Approx(tvd(q, p)));
    CHECK(tvd(p, q) >= 0);
    CHECK(tvd(p, q) <= tvd(p, r) + tvd(r, q) + 1e-12);
  }
}

TEST_CASE("uniformity of the ideal QFT(4) output for |++++>") {
  Circuit qft = build_qft(4);
  // prepend H on every qubit to prepare |++++>
  std::vector<Matrix> pre(4, gate_matrix(Gate::single(GateName::H, 0)));
  Circuit prepped = qft;
  prepped.cycles[0] = fold_easy_cycle(qft.cycles[0], pre, {}, 4);
  ProbDist ideal = measure_distribution(simulate_ideal(prepped), {});
  // the DFT maps the uniform superposition to a singular distribution
  CHECK(uniformity_distance(ideal) == doctest::Approx(0.9375).epsilon(1e-9));
}

TEST_CASE("trace distance: Euclidean identity on the Bloch sphere") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::Vector3d r1, r2;
    for (int i = 0; i < 3; ++i) {
      r1[i] = standard_normal(rng);
      r2[i] = standard_normal(rng);
    }
    r1 *= uniform01(rng) / r1.norm();
    r2 *= uniform01(rng) / r2.norm();
    auto bloch_to_rho = [](const Eigen::Vector3d& r) {
      Matrix rho = 0.5 * (Matrix::Identity(2, 2) + r[0] * PauliString::from_label("X").dense() +
                          r[1] * PauliString::from_label("Y").dense() +
                          r[2] * PauliString::from_label("Z").dense());
      return rho;
    };
    double d = trace_distance(bloch_to_rho(r1), bloch_to_rho(r2));
    CHECK(d == doctest::Approx(0.5 * (r1 - r2).norm()).epsilon(1e-10));
  }
}

TEST_CASE("tvd of measurement outcomes is bounded by the trace distance") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 2);
    Matrix rho = oracles::random_density_matrix(1 << n, rng);
    Matrix sigma = oracles::random_density_matrix(1 << n, rng);
    Matrix basis = oracles::random_unitary(1 << n, rng);
    ProbDist p{n, (basis * rho * basis.adjoint()).diagonal().real()};
    ProbDist q{n, (basis * sigma * basis.adjoint()).diagonal().real()};
    CHECK(tvd(p, q) <= trace_distance(rho, sigma) + 1e-10);
  }
}

TEST_CASE("state fidelity and purity basics") {
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = 1;
  Vector psi(2);
  psi << 1, 0;
  CHECK(state_fidelity(rho, psi) == doctest::Approx(1.0));
  CHECK(purity(rho) == doctest::Approx(1.0));
  CHECK(trace_distance(rho, rho) == doctest::Approx(0.0));

  Matrix mixed = 0.5 * Matrix::Identity(2, 2);
  CHECK(purity(mixed) == doctest::Approx(0.5));

  Matrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(purity(bad), ValidationError);
}

TEST_CASE("bloch_from_tomography") {
  CountDist z_plus{1, {1000, 0}, 1000};
  CountDist balanced{1, {500, 500}, 1000};
  BlochState up = bloch_from_tomography(balanced, balanced, z_plus);
  CHECK(up.r.isApprox(Eigen::Vector3d(0, 0, 1)));
  CHECK(up.purity == doctest::Approx(1.0));
  CHECK(bloch_fidelity(up, Eigen::Vector3d(0, 0, 1)) == doctest::Approx(1.0));

  BlochState mixed = bloch_from_tomography(balanced, balanced, balanced);
  CHECK(mixed.r.norm() == doctest::Approx(0.0));
  CHECK(mixed.purity == doctest::Approx(0.5));

  CountDist empty{1, {0, 0}, 0};
  CHECK_THROWS_AS(bloch_from_tomography(empty, empty, empty), ValidationError);
}

TEST_CASE("infidelity conversions") {
  CHECK(process_from_avg_infidelity(0.0, 3) == doctest::Approx(0.0));
  CHECK(process_from_avg_infidelity(0.01, 1) == doctest::Approx(0.015));
  CHECK(avg_from_process_infidelity(0.015, 1) == doctest::Approx(0.01));

  std::mt19937_64 rng(5);
  Channel ch = Channel::from_kraus(1, oracles::random_cptp_kraus(2, 3, rng));
  double from_trace = 1.0 - oracles::kraus_to_ptm(ch.kraus(), 1).trace() / 4.0;
  CHECK(process_infidelity(ch) == doctest::Approx(from_trace).epsilon(1e-10));
  CHECK(avg_gate_infidelity(ch) ==
        doctest::Approx(avg_from_process_infidelity(process_infidelity(ch), 1)));
}

TEST_CASE("avg_gate_infidelity: identity, depolarizing, z-rotation") {
  CHECK(avg_gate_infidelity(Channel::identity(1)) == doctest::Approx(0.0));

  PauliProbabilityVector uni{1, Eigen::Vector4d(0.25, 0.25, 0.25, 0.25)};
  CHECK(avg_gate_infidelity(make_pauli_channel(uni)) == doctest::Approx(0.5));

  for (double theta : {0.02, 0.3, 1.1}) {
    Channel rz = make_coherent(Eigen::Vector3d(0, 0, theta / 2));
    double expect = (2.0 / 3) * std::pow(std::sin(theta / 2), 2);
    CHECK(avg_gate_infidelity(rz) == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("worst_case_tvd: identity and Pauli channels") {
  CHECK(worst_case_tvd(Channel::identity(1), 20, 1).value == doctest::Approx(0.0));

  double eps = 0.04;
  PauliProbabilityVector q{1, Eigen::Vector4d(1 - eps, eps / 2, eps / 4, eps / 4)};
  WorstCaseTvd wc = worst_case_tvd(make_pauli_channel(q), 100, 2);
  CHECK(wc.value <= eps + 1e-9);  // stochastic channels stay at the linear bound
  CHECK(wc.value > 0.25 * eps);
}

TEST_CASE("worst_case_tvd: linear for coherent, quadratic after twirling") {
  std::vector<double> log_theta, log_wc, log_r, log_wc_twirled;
  for (double theta : {1e-3, 3e-3, 1e-2, 3e-2, 1e-1}) {
    Channel rz = make_coherent(Eigen::Vector3d(0, 0, theta / 2));
    log_theta.push_back(std::log(theta));
    log_wc.push_back(std::log(worst_case_tvd(rz, 60, 7).value));
    log_r.push_back(std::log(avg_gate_infidelity(rz)));
    log_wc_twirled.push_back(std::log(worst_case_tvd(rz.pauli_twirled(), 60, 7).value));
  }
  CHECK(std::abs(linear_fit(log_theta, log_r).slope - 2.0) < 0.05);
  CHECK(std::abs(linear_fit(log_theta, log_wc).slope - 1.0) < 0.1);
  CHECK(std::abs(linear_fit(log_theta, log_wc_twirled).slope - 2.0) < 0.1);
}

TEST_CASE("pearson_r") {
  std::vector<double> xs = {1, 2, 3, 4}, ys = {2, 4, 6, 8};
  CHECK(pearson_r(xs, ys) == doctest::Approx(1.0));
  std::vector<double> flat = {1, 1, 1, 1};
  CHECK_THROWS_AS(pearson_r(xs, flat), ValidationError);
  CHECK_THROWS_AS(pearson_r({1, 2}, {1, 2}), ValidationError);
}

TEST_CASE("overlapping_index") {
  std::vector<double> a = {0.1, -0.2, 0.05, -0.1, 0.2, 0.0, -0.05, 0.12};
  CHECK(overlapping_index(a, a) == doctest::Approx(1.0));

  // N(0,1) vs N(1,1): overlap = 2 Phi(-1/2) ~ 0.6171; build large synthetic
  // samples whose fitted moments are exact
  std::mt19937_64 rng(8);
  std::vector<double> s1, s2;
  for (int i = 0; i < 20000; ++i) {
    double z = standard_normal(rng);
    s1.push_back(z);
    s2.push_back(z + 1.0);
  }
  CHECK(overlapping_index(s1, s2) == doctest::Approx(0.617075).epsilon(0.01));

  // unequal widths exercise the two-crossing branch
  std::vector<double> s3;
  for (double z : s1) s3.push_back(2.5 * z + 0.3);
  double ov = overlapping_index(s1, s3);
  CHECK(ov > 0.3);
  CHECK(ov < 0.8);
}

TEST_CASE("expectation_error_bound_check") {
  std::mt19937_64 rng(9);
  ProbDist p = random_dist(2, rng), q = random_dist(2, rng);
  Eigen::VectorXd identity_obs = Eigen::VectorXd::Ones(4);
  CHECK(expectation_error_bound_check(p, q, identity_obs));

  // Z⊗Z eigenvalues per bitstring
  Eigen::VectorXd zz(4);
  zz << 1, -1, -1, 1;
  for (int trial = 0; trial < 50; ++trial) {
    ProbDist a = random_dist(2, rng), b = random_dist(2, rng);
    CHECK(expectation_error_bound_check(a, b, zz));
  }
  CHECK(expectation_error_bound_check(p, p, zz));
}

TEST_CASE("linear_fit recovers exact lines") {
  std::vector<double> xs = {0, 1, 2, 3, 4};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.5 * x - 1.25);
  LinearFit f = linear_fit(xs, ys);
  CHECK(f.slope == doctest::Approx(3.5));
  CHECK(f.intercept == doctest::Approx(-1.25));
  CHECK(f.r_squared == doctest::Approx(1.0));
}

TEST_CASE("exact twirl union: purity meets fidelity; bare keeps purity and loses fidelity") {
  // one-cycle circuit with a coherent z-rotation after the hard cycle; the
  // input |+> is maximally exposed. Twirling turns the rotation (PTM angle
  // theta) into dephasing, and the union's purity-fidelity gap is exactly
  // -cos(theta) times the bare gap: zero at theta = pi/2.
  Vector ideal(2);
  ideal << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  Matrix rho_ideal = ideal * ideal.adjoint();
  for (double theta : {kPi / 2, 0.3}) {
    Channel rz = make_coherent(Eigen::Vector3d(0, 0, theta / 2));
    Matrix bare = rz.apply(rho_ideal);
    Matrix uni = rz.pauli_twirled().apply(rho_ideal);
    double bare_gap = purity(bare) - state_fidelity(bare, ideal);
    double union_gap = purity(uni) - state_fidelity(uni, ideal);
    CHECK(purity(bare) == doctest::Approx(1.0));
    CHECK(bare_gap > 0.02);  // fidelity < purity whenever theta != 0
    CHECK(union_gap == doctest::Approx(-std::cos(theta) * bare_gap).epsilon(1e-9));
    if (theta == kPi / 2) CHECK(std::abs(union_gap) < 1e-6);
  }
}

TEST_CASE("z-axis error before a Z measurement of |0> is invisible") {
  // bare and twirled TVDs both vanish when the target is a basis state
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = 1;
  double theta = 0.4;
  Channel rz = make_coherent(Eigen::Vector3d(0, 0, theta / 2));
  ProbDist ideal = measure_distribution(rho, {});
  ProbDist bare = measure_distribution(rz.apply(rho), {});
  ProbDist rc = measure_distribution(rz.pauli_twirled().apply(rho), {});
  CHECK(tvd(bare, ideal) == doctest::Approx(0.0));
  CHECK(tvd(rc, ideal) == doctest::Approx(0.0));
}
