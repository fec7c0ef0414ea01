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

#include "rckit/fit.hpp"
#include "rckit/metrics.hpp"
#include "rckit/rc.hpp"

namespace rckit {

/// Common experiment parameters. `shots` is the bare-circuit total; each
/// randomization is measured shots / n_randomizations times (the
/// randomization sweep instead measures every randomization `shots` times
/// and subsamples the union). shots == 0 switches to exact distributions.
struct ExperimentSpec {
  std::string kind;
  int n = 4;
  int k = 10;                       // fixed depth (rand-sweep, tomography step)
  std::vector<int> k_values;        // depth sweep grid
  uint64_t shots = 10000;
  int n_randomizations = 50;
  int n_random_inputs = 100;        // qft
  std::string input_set = "both";   // qft: basis | random | both
  int n_circuits = 100;             // circuits per point (sweeps)
  std::vector<double> s1_values = {0.0, 0.25, 0.5, 0.75, 0.95};  // coherent-fraction study
  double family_e_f = 5e-3;         // total error rate of the study family
  uint64_t seed = 0;
  bool seed_set = false;
};

// Throws ValidationError on inconsistent parameters (seed missing, shots not
// divisible by the randomization count, bad ranges).
void validate_spec(const ExperimentSpec& spec);

// Index-parallel map with deterministic per-index results; worker count is
// capped by the RCKIT_THREADS environment variable.
void parallel_for(int n_tasks, const std::function<void(int)>& fn);

struct QftRow {
  std::string input_kind;   // "basis" or "random"
  std::string input_label;  // e.g. "0+1+" or "random-17"
  double uniformity = 0;
  double bare_tvd = 0;
  double rc_tvd = 0;
  double ratio = 0;
};

struct QftReport {
  ExperimentSpec spec;
  std::vector<QftRow> rows;
  double mean_ratio_random = 0;     // mean of bare/rc over random inputs
  double frac_improved_random = 0;  // fraction of random inputs with ratio > 1
  double pearson_bare = 0;          // tvd vs uniformity, all rows
  double pearson_rc = 0;
};

QftReport run_qft_experiment(const ExperimentSpec& spec, const NoiseModel& nm);

struct DepthSweepRow {
  int k = 0;
  int circuit_index = 0;
  double uniformity = 0;
  double bare_tvd = 0;
  double rc_tvd = 0;
};

struct DepthSweepReport {
  ExperimentSpec spec;
  std::vector<DepthSweepRow> rows;
  std::vector<int> k_values;
  std::vector<double> bare_mean;  // per k
  std::vector<double> rc_mean;
  std::vector<double> bare_q10, bare_q90;  // per-k distribution quantiles
  std::vector<double> rc_q10, rc_q90;
  LinearFit bare_fit;  // mean tvd vs k
  LinearFit rc_fit;
  double mean_ratio = 0;  // mean per-circuit bare/rc
};

DepthSweepReport run_depth_sweep(const ExperimentSpec& spec, const NoiseModel& nm);

struct RandSweepReport {
  ExperimentSpec spec;
  std::vector<int> n_values;          // 1..n_randomizations
  std::vector<double> mean_rc_tvd;    // per n, unions subsampled to `shots`
  double bare_mean = 0;
  double bare_q10 = 0;  // 10% quantile of the bare TVDs
};

RandSweepReport run_randomization_sweep(const ExperimentSpec& spec, const NoiseModel& nm);

struct CoherentFractionRow {
  double s1 = 0;
  double coherent_fraction = 0;  // from the channel unitarity
  double mean_ratio = 0;
  double mean_bare_tvd = 0;
  double mean_rc_tvd = 0;
};

struct CoherentFractionReport {
  ExperimentSpec spec;
  std::vector<CoherentFractionRow> rows;
  double spearman = 0;  // rank correlation of ratio vs fraction
};

CoherentFractionReport run_coherent_fraction_study(const ExperimentSpec& spec);

struct TomographyRow {
  int k = 0;
  Eigen::Vector3d ideal_r;
  BlochState bare;
  BlochState rc_union;
  double bare_fidelity = 0;
  double rc_fidelity = 0;
  double bare_tvd_x = 0, bare_tvd_y = 0, bare_tvd_z = 0;
  double rc_tvd_x = 0, rc_tvd_y = 0, rc_tvd_z = 0;
};

struct TomographyReport {
  ExperimentSpec spec;
  std::vector<TomographyRow> rows;
};

TomographyReport run_tomography_demo(const ExperimentSpec& spec, const NoiseModel& nm);

// Fraction of the error rate attributable to coherence, estimated from the
// channel's unitarity (the stand-in for unitary RB).
double coherent_fraction_from_unitarity(const Channel& ch);

// Spearman rank correlation.
double spearman_rho(const std::vector<double>& xs, const std::vector<double>& ys);

// Draws `keep` shots from the union without replacement.
CountDist subsample_counts(const CountDist& counts, uint64_t keep, std::mt19937_64& rng);

// Report serialization: JSON (full) and CSV (flat rows).
std::string report_to_json(const QftReport& r);
std::string report_to_csv(const QftReport& r);
std::string report_to_json(const DepthSweepReport& r);
std::string report_to_csv(const DepthSweepReport& r);
std::string report_to_json(const RandSweepReport& r);
std::string report_to_csv(const RandSweepReport& r);
std::string report_to_json(const CoherentFractionReport& r);
std::string report_to_csv(const CoherentFractionReport& r);
std::string report_to_json(const TomographyReport& r);
std::string report_to_csv(const TomographyReport& r);

}  // namespace rckit
