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

#include <functional>
#include <string>
#include <vector>

#include "rckit/metrics.hpp"
#include "rckit/noise_model.hpp"

namespace rckit {

/// Cycle-benchmarking configuration. The cycle of interest must be Clifford
/// (frame tracking pushes the preparation basis through it). Sequence
/// lengths should be even so bases on period-2 orbits return to themselves.
///
/// shots_per_circuit == 0 runs on exact output distributions (shot-free);
/// randomizations_per_length == 0 additionally replaces sampled Pauli
/// twirls by their infinite-randomization limit, evaluated analytically
/// from the cycle's noise channel.
struct CBConfig {
  Cycle cycle;
  int n = 0;
  std::vector<int> lengths = {2, 8, 24};
  int randomizations_per_length = 2;
  uint64_t shots_per_circuit = 0;
  std::vector<PauliString> bases;  // empty: all 4^n - 1 non-identity
  int bootstrap_resamples = 200;
};

/// One generated CB circuit: prepare the +1 eigenstate of `basis`, run m
/// dressed cycles, rotate the final frame onto Z's. The ideal outcome is
/// expected_sign on the Z-product over final_support.
struct CBSequence {
  Circuit circuit;
  PauliString basis;
  int m = 0;
  double expected_sign = 1.0;
  PauliString final_frame;
};

// Deterministic single-sequence construction from explicit twirls
// (twirls.size() == m).
CBSequence build_cb_sequence(const Cycle& cycle, int n, const PauliString& basis,
                             const std::vector<PauliString>& twirls);

std::vector<CBSequence> generate_cb_sequences(const CBConfig& cfg, std::mt19937_64& rng);

// Signed expectation of the sequence's frame operator in a measured
// distribution.
double signed_expectation(const CBSequence& seq, const ProbDist& dist);

/// Per-basis exponential decay A p^m with fit uncertainties.
struct PauliDecay {
  PauliString basis;
  std::vector<std::pair<int, double>> points;  // (m, mean signed expectation)
  std::vector<std::vector<double>> raw;        // per-m per-randomization estimates
  double amplitude = 0;
  double p = 0;
  double amplitude_err = 0;
  double p_err = 0;
};

struct ExpFit {
  double a = 0;
  double p = 0;
  double a_err = 0;
  double p_err = 0;
};

// Nonlinear least squares for f(m) = A p^m, initialized from a log-linear
// fit, p clamped to [-1, 1]. Throws ValidationError on degenerate input.
ExpFit fit_exponential(const std::vector<std::pair<int, double>>& points);

struct CBResult {
  int n = 0;
  std::string signature;
  Cycle cycle;
  std::vector<PauliDecay> decays;
  double e_f = 0;          // dressed process infidelity from the fitted decays
  double e_f_low = 0;      // bootstrap 95% interval (zero width in exact modes)
  double e_f_high = 0;
  double e_f_analytic = 0;  // from the model's cycle channel
};

CBResult run_cb(const CBConfig& cfg, const NoiseModel& nm, uint64_t seed);

// PTM diagonal of the cycle's total (tensor-product) noise channel.
Eigen::VectorXd cycle_ptm_diagonal(const NoiseModel& nm, const Cycle& cycle, int n);
// 1 - mean of the diagonal: the cycle's process infidelity under perfect
// twirling.
double cycle_infidelity_analytic(const NoiseModel& nm, const Cycle& cycle, int n);

struct Marginal {
  std::string error_label;  // Pauli action on the subset, e.g. "X" or "ZZ"
  std::vector<int> qubits;
  double rate = 0;
  double ci_low = 0;
  double ci_high = 0;
};

struct CERResult {
  int n = 0;
  std::string signature;
  PauliProbabilityVector c;
  double clipped_mass = 0;  // negative mass removed by clipping
  double e_f = 0;           // 1 - c[identity]
  std::vector<Marginal> marginals;
};

// Linear inversion p -> c via the inverse Walsh-Hadamard transform; needs a
// decay for every non-identity basis. Negative entries are clipped to zero
// and the distribution renormalized, with the clipped mass recorded.
CERResult reconstruct_error_rates(const std::vector<PauliDecay>& decays, int n);

// Same, plus per-marginal 95% intervals from resampling the per-cell raw
// estimates and refitting (zero width when the raw data has no variance).
CERResult reconstruct_error_rates_with_ci(const std::vector<PauliDecay>& decays, int n,
                                          int resamples, uint64_t seed);

// Sum of c over all Paulis acting exactly as `label` on `qubits`.
double marginal_rate(const PauliProbabilityVector& c, const std::vector<int>& qubits,
                     const std::string& label);

// Percentile-bootstrap 95% interval of `statistic` under resampling of the
// records with replacement.
std::pair<double, double> bootstrap_ci(const std::vector<double>& records,
                                       const std::function<double(const std::vector<double>&)>& statistic,
                                       int resamples, uint64_t seed);

std::string cb_result_to_json(const CBResult& r);
CBResult cb_result_from_json(const std::string& text);
std::string cer_result_to_json(const CERResult& r);

}  // namespace rckit
