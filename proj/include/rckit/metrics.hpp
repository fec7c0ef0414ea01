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
#include <vector>

#include "rckit/channel.hpp"
#include "rckit/simulate.hpp"

namespace rckit {

// Total variation distance 0.5 * sum |p - q|; counts normalize internally.
double tvd(const ProbDist& p, const ProbDist& q);
double tvd(const CountDist& p, const ProbDist& q);
double tvd(const CountDist& p, const CountDist& q);

// TVD of the given distribution from uniform over 2^n outcomes: 0 when
// uniform, maximized when singular.
double uniformity_distance(const ProbDist& p_ideal);

double trace_distance(const Matrix& rho, const Matrix& sigma);
double state_fidelity(const Matrix& rho, const Vector& psi);
double purity(const Matrix& rho);

/// Single-qubit state estimated from ensemble measurements in X, Y, Z.
struct BlochState {
  Eigen::Vector3d r;
  double purity = 0;
};

BlochState bloch_from_tomography(const CountDist& counts_x, const CountDist& counts_y,
                                 const CountDist& counts_z);
// Fidelity with the pure state of Bloch vector `ideal` (unit length).
double bloch_fidelity(const BlochState& state, const Eigen::Vector3d& ideal);

// e_F = r (d+1)/d and back, d = 2^n.
double process_from_avg_infidelity(double r, int n);
double avg_from_process_infidelity(double e_f, int n);

// 1 - Tr[PTM] / 4^n.
double process_infidelity(const Channel& ch);
// Average gate infidelity via the entanglement-fidelity route.
double avg_gate_infidelity(const Channel& ch);

struct WorstCaseTvd {
  double value = 0;
  Vector argmax_state;
  std::string argmax_basis;
};

// Maximizes tvd(ideal, noisy outcome distribution) over sampled Haar product
// states and all Pauli measurement bases; deterministic under seed.
WorstCaseTvd worst_case_tvd(const Channel& ch, int n_probe_states, uint64_t seed);

double pearson_r(const std::vector<double>& xs, const std::vector<double>& ys);

// Fits a normal to each sample and integrates the pointwise minimum of the
// two densities (in [0, 1], 1 for identical fits).
double overlapping_index(const std::vector<double>& sample_a, const std::vector<double>& sample_b);

// Checks |<A>_p - <A>_q| <= 2 tvd(p, q) ||A|| + 1e-12 for an observable
// diagonal in the measurement basis (given by its eigenvalues per bitstring).
bool expectation_error_bound_check(const ProbDist& p, const ProbDist& q,
                                   const Eigen::VectorXd& observable);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
};

LinearFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace rckit
