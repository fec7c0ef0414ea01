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

#include "rckit/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "rckit/errors.hpp"
#include "rckit/rng.hpp"
#include "rckit/version.hpp"

namespace rckit {

namespace {

using nlohmann::json;

json spec_to_json(const ExperimentSpec& spec) {
  json j;
  j["kind"] = spec.kind;
  j["n"] = spec.n;
  j["k"] = spec.k;
  j["k_values"] = spec.k_values;
  j["shots"] = spec.shots;
  j["n_randomizations"] = spec.n_randomizations;
  j["n_random_inputs"] = spec.n_random_inputs;
  j["input_set"] = spec.input_set;
  j["n_circuits"] = spec.n_circuits;
  j["s1_values"] = spec.s1_values;
  j["family_e_f"] = spec.family_e_f;
  j["seed"] = spec.seed;
  return j;
}

json report_header(const ExperimentSpec& spec) {
  json j;
  j["library_version"] = kVersion;
  j["spec"] = spec_to_json(spec);
  return j;
}

bool uses_rc_shot_split(const std::string& kind) {
  return kind == "qft" || kind == "depth-sweep" || kind == "tomography" ||
         kind == "coherent-fraction";
}

}  // namespace

void validate_spec(const ExperimentSpec& spec) {
  if (!spec.seed_set) throw ValidationError("experiment: seed is mandatory");
  if (spec.n < 1 || spec.n > 5) throw ValidationError("experiment: n must be in [1, 5]");
  if (spec.n_randomizations < 1) throw ValidationError("experiment: n_randomizations must be >= 1");
  if (spec.shots > 0 && uses_rc_shot_split(spec.kind) &&
      spec.shots % static_cast<uint64_t>(spec.n_randomizations) != 0)
    throw ValidationError("experiment: shots must be divisible by n_randomizations");
  if (spec.kind == "depth-sweep") {
    if (spec.k_values.empty()) throw ValidationError("depth-sweep: K list required");
    for (int k : spec.k_values)
      if (k < 1) throw ValidationError("depth-sweep: K values must be >= 1");
  }
  if (spec.kind == "rand-sweep" && spec.k < 1)
    throw ValidationError("rand-sweep: K must be >= 1");
  if (spec.kind == "tomography" && spec.n != 1)
    throw ValidationError("tomography: single qubit only");
}

void parallel_for(int n_tasks, const std::function<void(int)>& fn) {
  if (n_tasks <= 0) return;
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (const char* env = std::getenv("RCKIT_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) workers = std::min(workers, cap);
  }
  workers = std::min(workers, n_tasks);
  if (workers <= 1) {
    for (int i = 0; i < n_tasks; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= n_tasks) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

struct CircuitEval {
  double uniformity = 0;
  double bare_tvd = 0;
  double rc_tvd = 0;
};

double ratio_of(double bare, double rc) {
  if (rc <= 0) return bare <= 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return bare / rc;
}

// Bare vs unioned-RC TVD for one circuit. rc_shots_each == 0 runs on exact
// distributions (the RC union is then the plain average over randomizations).
CircuitEval evaluate_circuit(const Circuit& c, const NoiseModel& nm, uint64_t bare_shots,
                             int n_rand, uint64_t rc_shots_each, uint64_t seed) {
  CircuitEval out;
  ProbDist ideal = measure_distribution(simulate_ideal(c), {});
  out.uniformity = uniformity_distance(ideal);

  SimEngine engine(&nm, c.n);
  ProbDist bare = measure_distribution(engine.run(c), nm.readout());
  if (bare_shots > 0) {
    std::mt19937_64 rng = child_rng(seed, 101);
    out.bare_tvd = tvd(sample_counts(bare, bare_shots, rng), ideal);
  } else {
    out.bare_tvd = tvd(bare, ideal);
  }

  auto randomizations = randomize_batch(c, n_rand, mix_seed(seed, 202));
  if (rc_shots_each > 0) {
    std::vector<CountDist> parts;
    std::mt19937_64 rng = child_rng(seed, 303);
    for (const auto& rc : randomizations) {
      ProbDist dist = measure_distribution(engine.run(rc.compiled), nm.readout());
      parts.push_back(sample_counts(dist, rc_shots_each, rng));
    }
    out.rc_tvd = tvd(union_counts(parts), ideal);
  } else {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(ideal.probs.size());
    for (const auto& rc : randomizations)
      acc += measure_distribution(engine.run(rc.compiled), nm.readout()).probs;
    acc /= static_cast<double>(randomizations.size());
    out.rc_tvd = tvd(ProbDist{c.n, acc}, ideal);
  }
  return out;
}

Circuit with_input_prep(const Circuit& base, const std::vector<Matrix>& prep) {
  Circuit out = base;
  out.cycles[0] = fold_easy_cycle(base.cycles[0], prep, {}, base.n);
  return out;
}

}  // namespace

QftReport run_qft_experiment(const ExperimentSpec& spec, const NoiseModel& nm) {
  validate_spec(spec);
  QftReport report;
  report.spec = spec;
  Circuit qft = build_qft(spec.n);

  struct Task {
    std::string kind;
    std::string label;
    std::vector<Matrix> prep;
  };
  std::vector<Task> tasks;

  if (spec.input_set == "basis" || spec.input_set == "both") {
    Matrix eye = Matrix::Identity(2, 2);
    Matrix x = PauliString::from_label("X").dense();
    Matrix h = gate_matrix(Gate::single(GateName::H, 0));
    int total = 1;
    for (int q = 0; q < spec.n; ++q) total *= 3;
    for (int code = 0; code < total; ++code) {
      Task t;
      t.kind = "basis";
      int rem = code;
      for (int q = 0; q < spec.n; ++q) {
        int digit = rem % 3;
        rem /= 3;
        t.label.push_back(digit == 0 ? '0' : (digit == 1 ? '1' : '+'));
        t.prep.push_back(digit == 0 ? eye : (digit == 1 ? x : h));
      }
      tasks.push_back(std::move(t));
    }
  }
  if (spec.input_set == "random" || spec.input_set == "both") {
    for (int i = 0; i < spec.n_random_inputs; ++i) {
      std::mt19937_64 rng = child_rng(spec.seed, 7000 + static_cast<uint64_t>(i));
      Task t;
      t.kind = "random";
      t.label = "random-" + std::to_string(i);
      for (int q = 0; q < spec.n; ++q) {
        Complex a(standard_normal(rng), standard_normal(rng));
        Complex b(standard_normal(rng), standard_normal(rng));
        double norm = std::sqrt(std::norm(a) + std::norm(b));
        a /= norm;
        b /= norm;
        Matrix u(2, 2);
        u << a, -std::conj(b), b, std::conj(a);
        t.prep.push_back(u);
      }
      tasks.push_back(std::move(t));
    }
  }
  if (tasks.empty()) throw ValidationError("qft: empty input set");

  uint64_t rc_each = spec.shots / static_cast<uint64_t>(spec.n_randomizations);
  report.rows.resize(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), [&](int i) {
    const Task& t = tasks[static_cast<std::size_t>(i)];
    CircuitEval ev = evaluate_circuit(with_input_prep(qft, t.prep), nm, spec.shots,
                                      spec.n_randomizations, spec.shots > 0 ? rc_each : 0,
                                      mix_seed(spec.seed, 500 + static_cast<uint64_t>(i)));
    QftRow row;
    row.input_kind = t.kind;
    row.input_label = t.label;
    row.uniformity = ev.uniformity;
    row.bare_tvd = ev.bare_tvd;
    row.rc_tvd = ev.rc_tvd;
    row.ratio = ratio_of(ev.bare_tvd, ev.rc_tvd);
    report.rows[static_cast<std::size_t>(i)] = std::move(row);
  });

  std::vector<double> unis, bares, rcs;
  double ratio_sum = 0;
  int random_count = 0, improved = 0;
  for (const auto& row : report.rows) {
    unis.push_back(row.uniformity);
    bares.push_back(row.bare_tvd);
    rcs.push_back(row.rc_tvd);
    if (row.input_kind == "random") {
      ++random_count;
      ratio_sum += row.ratio;
      if (row.ratio > 1.0) ++improved;
    }
  }
  if (random_count > 0) {
    report.mean_ratio_random = ratio_sum / random_count;
    report.frac_improved_random = static_cast<double>(improved) / random_count;
  }
  if (report.rows.size() >= 3) {
    try {
      report.pearson_bare = pearson_r(unis, bares);
      report.pearson_rc = pearson_r(unis, rcs);
    } catch (const ValidationError&) {
      // zero-variance series (e.g. noiseless runs); leave at 0
    }
  }
  return report;
}

DepthSweepReport run_depth_sweep(const ExperimentSpec& spec, const NoiseModel& nm) {
  validate_spec(spec);
  DepthSweepReport report;
  report.spec = spec;
  report.k_values = spec.k_values;

  const int per_k = spec.n_circuits;
  const int total = per_k * static_cast<int>(spec.k_values.size());
  report.rows.resize(static_cast<std::size_t>(total));
  uint64_t rc_each = spec.shots / static_cast<uint64_t>(spec.n_randomizations);

  parallel_for(total, [&](int i) {
    int ki = i / per_k;
    int ci = i % per_k;
    int k = spec.k_values[static_cast<std::size_t>(ki)];
    std::mt19937_64 rng = child_rng(spec.seed, 900000 + static_cast<uint64_t>(i));
    Circuit c = recompile_to_cx(sample_random_circuit(spec.n, k, RandomCircuitMode::MultiQubit, rng));
    CircuitEval ev = evaluate_circuit(c, nm, spec.shots, spec.n_randomizations,
                                      spec.shots > 0 ? rc_each : 0,
                                      mix_seed(spec.seed, 910000 + static_cast<uint64_t>(i)));
    DepthSweepRow row;
    row.k = k;
    row.circuit_index = ci;
    row.uniformity = ev.uniformity;
    row.bare_tvd = ev.bare_tvd;
    row.rc_tvd = ev.rc_tvd;
    report.rows[static_cast<std::size_t>(i)] = row;
  });

  std::vector<double> ks;
  double ratio_sum = 0;
  auto quantile = [](std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    return v[static_cast<std::size_t>(q * (v.size() - 1))];
  };
  for (std::size_t ki = 0; ki < spec.k_values.size(); ++ki) {
    double bare_sum = 0, rc_sum = 0;
    std::vector<double> bares, rcs;
    for (int ci = 0; ci < per_k; ++ci) {
      const auto& row = report.rows[ki * static_cast<std::size_t>(per_k) + static_cast<std::size_t>(ci)];
      bare_sum += row.bare_tvd;
      rc_sum += row.rc_tvd;
      bares.push_back(row.bare_tvd);
      rcs.push_back(row.rc_tvd);
      ratio_sum += ratio_of(row.bare_tvd, row.rc_tvd);
    }
    report.bare_mean.push_back(bare_sum / per_k);
    report.rc_mean.push_back(rc_sum / per_k);
    report.bare_q10.push_back(quantile(bares, 0.1));
    report.bare_q90.push_back(quantile(bares, 0.9));
    report.rc_q10.push_back(quantile(rcs, 0.1));
    report.rc_q90.push_back(quantile(rcs, 0.9));
    ks.push_back(spec.k_values[ki]);
  }
  report.bare_fit = linear_fit(ks, report.bare_mean);
  report.rc_fit = linear_fit(ks, report.rc_mean);
  report.mean_ratio = ratio_sum / total;
  return report;
}

CountDist subsample_counts(const CountDist& counts, uint64_t keep, std::mt19937_64& rng) {
  if (keep >= counts.shots) return counts;
  // walk the shots outcome by outcome, drawing a hypergeometric share
  CountDist out;
  out.n = counts.n;
  out.counts.assign(counts.counts.size(), 0);
  out.shots = keep;
  uint64_t remaining_total = counts.shots;
  uint64_t remaining_keep = keep;
  for (std::size_t i = 0; i < counts.counts.size() && remaining_keep > 0; ++i) {
    for (uint64_t s = 0; s < counts.counts[i] && remaining_keep > 0; ++s) {
      double accept = static_cast<double>(remaining_keep) / static_cast<double>(remaining_total);
      if (uniform01(rng) < accept) {
        ++out.counts[i];
        --remaining_keep;
      }
      --remaining_total;
    }
  }
  return out;
}

RandSweepReport run_randomization_sweep(const ExperimentSpec& spec, const NoiseModel& nm) {
  validate_spec(spec);
  if (spec.shots == 0) throw ValidationError("rand-sweep: needs sampled shots");
  RandSweepReport report;
  report.spec = spec;
  for (int n = 1; n <= spec.n_randomizations; ++n) report.n_values.push_back(n);

  const int total = spec.n_circuits;
  std::vector<std::vector<double>> per_circuit_tvds(static_cast<std::size_t>(total));
  std::vector<double> bare_tvds(static_cast<std::size_t>(total));

  parallel_for(total, [&](int i) {
    std::mt19937_64 rng = child_rng(spec.seed, 40000 + static_cast<uint64_t>(i));
    Circuit c = recompile_to_cx(
        sample_random_circuit(spec.n, spec.k, RandomCircuitMode::MultiQubit, rng));
    ProbDist ideal = measure_distribution(simulate_ideal(c), {});
    SimEngine engine(&nm, c.n);

    std::mt19937_64 shot_rng = child_rng(spec.seed, 41000 + static_cast<uint64_t>(i));
    ProbDist bare = measure_distribution(engine.run(c), nm.readout());
    bare_tvds[static_cast<std::size_t>(i)] = tvd(sample_counts(bare, spec.shots, shot_rng), ideal);

    // every randomization measured `shots` times; prefix unions subsampled
    // back down to `shots`
    auto randomizations = randomize_batch(c, spec.n_randomizations, mix_seed(spec.seed, 42000 + static_cast<uint64_t>(i)));
    CountDist running;
    std::vector<double> tvds;
    for (int nidx = 0; nidx < spec.n_randomizations; ++nidx) {
      ProbDist dist = measure_distribution(engine.run(randomizations[static_cast<std::size_t>(nidx)].compiled),
                                           nm.readout());
      CountDist counts = sample_counts(dist, spec.shots, shot_rng);
      running = (nidx == 0) ? counts : union_counts({running, counts});
      CountDist reduced = subsample_counts(running, spec.shots, shot_rng);
      tvds.push_back(tvd(reduced, ideal));
    }
    per_circuit_tvds[static_cast<std::size_t>(i)] = std::move(tvds);
  });

  for (int nidx = 0; nidx < spec.n_randomizations; ++nidx) {
    double sum = 0;
    for (const auto& tvds : per_circuit_tvds) sum += tvds[static_cast<std::size_t>(nidx)];
    report.mean_rc_tvd.push_back(sum / total);
  }
  std::vector<double> sorted_bare = bare_tvds;
  std::sort(sorted_bare.begin(), sorted_bare.end());
  report.bare_mean = std::accumulate(bare_tvds.begin(), bare_tvds.end(), 0.0) / total;
  report.bare_q10 = sorted_bare[static_cast<std::size_t>(0.1 * (sorted_bare.size() - 1))];
  return report;
}

double coherent_fraction_from_unitarity(const Channel& ch) {
  double d = static_cast<double>(Eigen::Index{1} << ch.n_body());
  double u = std::clamp(unitarity(ch), 0.0, 1.0);
  double r_avg = avg_gate_infidelity(ch);
  if (r_avg < 1e-15) return 0.0;
  double r_floor = (1.0 - std::sqrt(u)) * (d - 1) / d;
  return std::clamp(1.0 - r_floor / r_avg, 0.0, 1.0);
}

double spearman_rho(const std::vector<double>& xs, const std::vector<double>& ys) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < order.size(); ++i) r[order[i]] = static_cast<double>(i);
    return r;
  };
  return pearson_r(ranks(xs), ranks(ys));
}

CoherentFractionReport run_coherent_fraction_study(const ExperimentSpec& spec) {
  validate_spec(spec);
  CoherentFractionReport report;
  report.spec = spec;

  const double e = spec.family_e_f;
  Eigen::VectorXd cv(4);
  cv << 1 - e, e / 3, e / 3, e / 3;
  FitTarget target;
  target.n_body = 1;
  target.f = walsh_hadamard(PauliProbabilityVector{1, cv}).p;
  target.s0 = 1.0;

  report.rows.resize(spec.s1_values.size());
  parallel_for(static_cast<int>(spec.s1_values.size()), [&](int si) {
    double s1 = spec.s1_values[static_cast<std::size_t>(si)];
    NoiseModel nm;
    Channel family_channel = Channel::identity(1);
    if (s1 == 0.0) {
      // the purely stochastic member is the Pauli channel itself
      PauliProbabilityVector qp{1, cv};
      family_channel = make_pauli_channel(qp);
      nm.set_default_body(0, NoiseBody::make({0}, qp, Eigen::Vector3d::Zero()));
    } else {
      FitTarget t = target;
      t.s1 = s1;
      FitResult fit = fit_channel(t, 8, mix_seed(spec.seed, 600 + static_cast<uint64_t>(si)));
      family_channel = fit.channel;
      nm.set_default_body(0, NoiseBody::make({0}, fit.q, fit.h));
    }

    uint64_t rc_each =
        spec.shots > 0 ? spec.shots / static_cast<uint64_t>(spec.n_randomizations) : 0;
    double bare_sum = 0, rc_sum = 0, ratio_sum = 0;
    for (int ci = 0; ci < spec.n_circuits; ++ci) {
      std::mt19937_64 rng =
          child_rng(spec.seed, 61000 + static_cast<uint64_t>(si) * 1000 + static_cast<uint64_t>(ci));
      Circuit c = sample_random_circuit(1, spec.k, RandomCircuitMode::SingleQubit, rng);
      CircuitEval ev = evaluate_circuit(
          c, nm, spec.shots, spec.n_randomizations, rc_each,
          mix_seed(spec.seed, 62000 + static_cast<uint64_t>(si) * 1000 + static_cast<uint64_t>(ci)));
      bare_sum += ev.bare_tvd;
      rc_sum += ev.rc_tvd;
      ratio_sum += ratio_of(ev.bare_tvd, ev.rc_tvd);
    }
    CoherentFractionRow row;
    row.s1 = s1;
    row.coherent_fraction = coherent_fraction_from_unitarity(family_channel);
    row.mean_bare_tvd = bare_sum / spec.n_circuits;
    row.mean_rc_tvd = rc_sum / spec.n_circuits;
    row.mean_ratio = ratio_sum / spec.n_circuits;
    report.rows[static_cast<std::size_t>(si)] = row;
  });

  std::vector<double> fractions, ratios;
  for (const auto& row : report.rows) {
    fractions.push_back(row.coherent_fraction);
    ratios.push_back(row.mean_ratio);
  }
  report.spearman = spearman_rho(fractions, ratios);
  return report;
}

TomographyReport run_tomography_demo(const ExperimentSpec& spec, const NoiseModel& nm) {
  validate_spec(spec);
  TomographyReport report;
  report.spec = spec;

  std::vector<int> ks = spec.k_values.empty() ? std::vector<int>{5, 25, 50, 75, 100} : spec.k_values;
  int max_k = *std::max_element(ks.begin(), ks.end());
  std::mt19937_64 rng = child_rng(spec.seed, 1);
  Circuit full = sample_random_circuit(1, max_k, RandomCircuitMode::SingleQubit, rng);

  Matrix h = gate_matrix(Gate::single(GateName::H, 0));
  Matrix sdg = gate_matrix(Gate::single(GateName::Sdg, 0));
  std::vector<Matrix> basis_rot = {h, h * sdg, Matrix::Identity(2, 2)};  // X, Y, Z

  uint64_t rc_each = spec.shots / static_cast<uint64_t>(spec.n_randomizations);
  report.rows.resize(ks.size());
  parallel_for(static_cast<int>(ks.size()), [&](int idx) {
    int k = ks[static_cast<std::size_t>(idx)];
    Circuit prefix;
    prefix.n = 1;
    prefix.cycles.assign(full.cycles.begin(), full.cycles.begin() + 2 * k + 1);

    Matrix rho_ideal = simulate_ideal(prefix);
    Eigen::Vector3d ideal_r;
    ideal_r << (rho_ideal * PauliString::from_label("X").dense()).trace().real(),
        (rho_ideal * PauliString::from_label("Y").dense()).trace().real(),
        (rho_ideal * PauliString::from_label("Z").dense()).trace().real();

    SimEngine engine(&nm, 1);
    Matrix rho_bare = engine.run(prefix);

    std::mt19937_64 shot_rng = child_rng(spec.seed, 8000 + static_cast<uint64_t>(idx));
    std::vector<CountDist> bare_counts, rc_counts;
    std::vector<ProbDist> ideal_dists;
    for (int b = 0; b < 3; ++b) {
      const Matrix& rot = basis_rot[static_cast<std::size_t>(b)];
      ideal_dists.push_back(measure_distribution(rot * rho_ideal * rot.adjoint(), {}));
      ProbDist dist = measure_distribution(rot * rho_bare * rot.adjoint(), nm.readout());
      bare_counts.push_back(sample_counts(dist, spec.shots, shot_rng));
    }

    auto randomizations =
        randomize_batch(prefix, spec.n_randomizations, mix_seed(spec.seed, 8100 + static_cast<uint64_t>(idx)));
    std::vector<std::vector<CountDist>> rc_parts(3);
    for (const auto& rc : randomizations) {
      Matrix rho_rc = engine.run(rc.compiled);
      for (int b = 0; b < 3; ++b) {
        const Matrix& rot = basis_rot[static_cast<std::size_t>(b)];
        ProbDist dist = measure_distribution(rot * rho_rc * rot.adjoint(), nm.readout());
        rc_parts[static_cast<std::size_t>(b)].push_back(sample_counts(dist, rc_each, shot_rng));
      }
    }
    for (int b = 0; b < 3; ++b)
      rc_counts.push_back(union_counts(rc_parts[static_cast<std::size_t>(b)]));

    TomographyRow row;
    row.k = k;
    row.ideal_r = ideal_r;
    row.bare = bloch_from_tomography(bare_counts[0], bare_counts[1], bare_counts[2]);
    row.rc_union = bloch_from_tomography(rc_counts[0], rc_counts[1], rc_counts[2]);
    row.bare_fidelity = bloch_fidelity(row.bare, ideal_r);
    row.rc_fidelity = bloch_fidelity(row.rc_union, ideal_r);
    row.bare_tvd_x = tvd(bare_counts[0], ideal_dists[0]);
    row.bare_tvd_y = tvd(bare_counts[1], ideal_dists[1]);
    row.bare_tvd_z = tvd(bare_counts[2], ideal_dists[2]);
    row.rc_tvd_x = tvd(rc_counts[0], ideal_dists[0]);
    row.rc_tvd_y = tvd(rc_counts[1], ideal_dists[1]);
    row.rc_tvd_z = tvd(rc_counts[2], ideal_dists[2]);
    report.rows[static_cast<std::size_t>(idx)] = std::move(row);
  });
  return report;
}

// ---------------------------------------------------------------------------
// report serialization

std::string report_to_json(const QftReport& r) {
  json j = report_header(r.spec);
  j["rows"] = json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back(json{{"input_kind", row.input_kind},
                             {"input_label", row.input_label},
                             {"uniformity", row.uniformity},
                             {"bare_tvd", row.bare_tvd},
                             {"rc_tvd", row.rc_tvd},
                             {"ratio", row.ratio}});
  j["summary"] = json{{"mean_ratio_random", r.mean_ratio_random},
                      {"frac_improved_random", r.frac_improved_random},
                      {"pearson_bare", r.pearson_bare},
                      {"pearson_rc", r.pearson_rc}};
  return j.dump(2);
}

std::string report_to_csv(const QftReport& r) {
  std::ostringstream os;
  os << "input_kind,input_label,uniformity,bare_tvd,rc_tvd,ratio\n";
  for (const auto& row : r.rows)
    os << row.input_kind << ',' << row.input_label << ',' << row.uniformity << ','
       << row.bare_tvd << ',' << row.rc_tvd << ',' << row.ratio << '\n';
  return os.str();
}

std::string report_to_json(const DepthSweepReport& r) {
  json j = report_header(r.spec);
  j["rows"] = json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back(json{{"k", row.k},
                             {"circuit", row.circuit_index},
                             {"uniformity", row.uniformity},
                             {"bare_tvd", row.bare_tvd},
                             {"rc_tvd", row.rc_tvd}});
  j["summary"] = json{{"k_values", r.k_values},
                      {"bare_mean", r.bare_mean},
                      {"rc_mean", r.rc_mean},
                      {"bare_q10", r.bare_q10},
                      {"bare_q90", r.bare_q90},
                      {"rc_q10", r.rc_q10},
                      {"rc_q90", r.rc_q90},
                      {"bare_fit", {{"slope", r.bare_fit.slope}, {"intercept", r.bare_fit.intercept}, {"r_squared", r.bare_fit.r_squared}}},
                      {"rc_fit", {{"slope", r.rc_fit.slope}, {"intercept", r.rc_fit.intercept}, {"r_squared", r.rc_fit.r_squared}}},
                      {"mean_ratio", r.mean_ratio}};
  return j.dump(2);
}

std::string report_to_csv(const DepthSweepReport& r) {
  std::ostringstream os;
  os << "k,circuit,uniformity,bare_tvd,rc_tvd\n";
  for (const auto& row : r.rows)
    os << row.k << ',' << row.circuit_index << ',' << row.uniformity << ',' << row.bare_tvd
       << ',' << row.rc_tvd << '\n';
  return os.str();
}

std::string report_to_json(const RandSweepReport& r) {
  json j = report_header(r.spec);
  j["n_values"] = r.n_values;
  j["mean_rc_tvd"] = r.mean_rc_tvd;
  j["bare_mean"] = r.bare_mean;
  j["bare_q10"] = r.bare_q10;
  return j.dump(2);
}

std::string report_to_csv(const RandSweepReport& r) {
  std::ostringstream os;
  os << "n,mean_rc_tvd\n";
  for (std::size_t i = 0; i < r.n_values.size(); ++i)
    os << r.n_values[i] << ',' << r.mean_rc_tvd[i] << '\n';
  return os.str();
}

std::string report_to_json(const CoherentFractionReport& r) {
  json j = report_header(r.spec);
  j["rows"] = json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back(json{{"s1", row.s1},
                             {"coherent_fraction", row.coherent_fraction},
                             {"mean_ratio", row.mean_ratio},
                             {"mean_bare_tvd", row.mean_bare_tvd},
                             {"mean_rc_tvd", row.mean_rc_tvd}});
  j["summary"] = json{{"spearman", r.spearman}};
  return j.dump(2);
}

std::string report_to_csv(const CoherentFractionReport& r) {
  std::ostringstream os;
  os << "s1,coherent_fraction,mean_ratio,mean_bare_tvd,mean_rc_tvd\n";
  for (const auto& row : r.rows)
    os << row.s1 << ',' << row.coherent_fraction << ',' << row.mean_ratio << ','
       << row.mean_bare_tvd << ',' << row.mean_rc_tvd << '\n';
  return os.str();
}

std::string report_to_json(const TomographyReport& r) {
  json j = report_header(r.spec);
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    j["rows"].push_back(json{
        {"k", row.k},
        {"ideal_r", {row.ideal_r[0], row.ideal_r[1], row.ideal_r[2]}},
        {"bare_r", {row.bare.r[0], row.bare.r[1], row.bare.r[2]}},
        {"rc_r", {row.rc_union.r[0], row.rc_union.r[1], row.rc_union.r[2]}},
        {"bare_purity", row.bare.purity},
        {"rc_purity", row.rc_union.purity},
        {"bare_fidelity", row.bare_fidelity},
        {"rc_fidelity", row.rc_fidelity},
        {"bare_tvd", {row.bare_tvd_x, row.bare_tvd_y, row.bare_tvd_z}},
        {"rc_tvd", {row.rc_tvd_x, row.rc_tvd_y, row.rc_tvd_z}}});
  }
  return j.dump(2);
}

std::string report_to_csv(const TomographyReport& r) {
  std::ostringstream os;
  os << "k,bare_purity,bare_fidelity,rc_purity,rc_fidelity,bare_tvd_x,rc_tvd_x,bare_tvd_y,"
        "rc_tvd_y,bare_tvd_z,rc_tvd_z\n";
  for (const auto& row : r.rows)
    os << row.k << ',' << row.bare.purity << ',' << row.bare_fidelity << ',' << row.rc_union.purity
       << ',' << row.rc_fidelity << ',' << row.bare_tvd_x << ',' << row.rc_tvd_x << ','
       << row.bare_tvd_y << ',' << row.rc_tvd_y << ',' << row.bare_tvd_z << ',' << row.rc_tvd_z
       << '\n';
  return os.str();
}

}  // namespace rckit
