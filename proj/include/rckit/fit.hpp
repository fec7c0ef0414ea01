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
#include <optional>

#include "rckit/cb.hpp"
#include "rckit/noise_model.hpp"

namespace rckit {

/// Fit target for one body: the measured PTM diagonal f, the infidelity
/// scale s0 and the unitarity fraction s1. The channel to find satisfies
///   d(q, h) = 1 - s0 (1 - f)
///   u(q, h) = 1 - (1 - s1)(1 - fbar^2)
/// with fbar the mean of the (scaled) target diagonal.
struct FitTarget {
  int n_body = 0;
  Eigen::VectorXd f;  // length 4^n_body, f[0] = 1
  double s0 = 1.0;
  double s1 = 0.7;
  // bypasses the s1 formula when the caller knows the exact unitarity value
  std::optional<double> u_override;

  Eigen::VectorXd target_d() const;  // scaled diagonal
  double target_u() const;
};

struct FitResult {
  PauliProbabilityVector q;
  Eigen::VectorXd h;
  double residual = 0;
  int iterations = 0;
  Channel channel = Channel::identity(1);
};

/// Quasi-Newton (BFGS with backtracking line search) minimization of
/// ||d(q,h) - d_target||^2 + (u(q,h) - u_target)^2 over softmax-parameterized
/// q and unconstrained h, with central-difference gradients and multistart.
/// Throws FitFailedError when no start reaches residual < 1e-10.
FitResult fit_channel(const FitTarget& target, int n_starts = 8, uint64_t seed = 17);

// Objective pieces, exposed for tests and audits.
Eigen::VectorXd sqh_diagonal(const PauliProbabilityVector& q, const Eigen::VectorXd& h);
double sqh_unitarity(const PauliProbabilityVector& q);
double fit_objective(const FitTarget& target, const PauliProbabilityVector& q,
                     const Eigen::VectorXd& h);

/// Per-cycle CER data feeding the model builder.
struct CerInput {
  Cycle cycle;
  CERResult cer;
};

struct ModelScales {
  double s0_1q = 1.0;
  double s0_2q = 1.0;
  double s1_1q = 0.7;
  double s1_2q = 0.9;
};

// Builds the complete model: for each hard cycle, one fitted two-qubit body
// for the entangling pair (when present) and fitted single-qubit bodies for
// every spectator; per-body f comes from marginalizing the reconstructed c
// to the subset and transforming forward. With pauli_model = true the bodies
// are the reconstructed Pauli channels themselves (q = marginal c, h = 0)
// and no optimization runs.
NoiseModel build_noise_model(const std::vector<CerInput>& cer_inputs, int n,
                             const ModelScales& scales, std::vector<ReadoutConfusion> readout,
                             bool pauli_model = false, uint64_t seed = 99);

// Marginal error distribution of c on a qubit subset (summing over the
// actions elsewhere).
PauliProbabilityVector marginalize_c(const PauliProbabilityVector& c, const std::vector<int>& qubits);

}  // namespace rckit
