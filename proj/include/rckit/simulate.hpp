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

#include <map>
#include <random>
#include <vector>

#include "rckit/noise_model.hpp"

namespace rckit {

/// Exact probabilities over bitstrings; index bit of qubit 0 is the most
/// significant, matching the density-matrix basis order.
struct ProbDist {
  int n = 0;
  Eigen::VectorXd probs;
};

/// Sampled counts with the total shot number.
struct CountDist {
  int n = 0;
  std::vector<uint64_t> counts;
  uint64_t shots = 0;
};

/// Propagates |0...0><0...0| through a circuit: easy cycles ideally, each
/// hard cycle ideally followed by its tensor-product noise channel. One
/// engine caches lifted Kraus operators per hard-cycle signature; engines
/// are cheap and not shared across threads.
class SimEngine {
 public:
  // model == nullptr simulates noiselessly.
  SimEngine(const NoiseModel* model, int n);

  Matrix run(const Circuit& c);
  // Applies the circuit to a caller-provided initial state.
  Matrix run_from(const Circuit& c, Matrix rho);

 private:
  const NoiseModel* model_;
  int n_;
  std::map<std::string, std::vector<std::vector<Matrix>>> cache_;  // per body
};

// One-shot helpers on top of SimEngine.
Matrix simulate(const Circuit& c, const NoiseModel& nm);
Matrix simulate_ideal(const Circuit& c);

// diag(rho) pushed through the per-qubit confusion matrices
// [[p00, 1-p11], [1-p00, p11]]. An empty readout vector means perfect
// readout for every qubit.
ProbDist measure_distribution(const Matrix& rho, const std::vector<ReadoutConfusion>& readout);

// Multinomial draw; deterministic under the caller's seeded rng.
CountDist sample_counts(const ProbDist& d, uint64_t shots, std::mt19937_64& rng);

CountDist union_counts(const std::vector<CountDist>& parts);
ProbDist counts_to_probs(const CountDist& counts);

}  // namespace rckit
