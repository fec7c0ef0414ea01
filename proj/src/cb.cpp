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

#include "rckit/cb.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <nlohmann/json.hpp>

#include "rckit/errors.hpp"
#include "rckit/rng.hpp"

namespace rckit {

namespace {

using nlohmann::json;

Matrix prep_matrix(char axis) {
  Matrix h = gate_matrix(Gate::single(GateName::H, 0));
  Matrix s = gate_matrix(Gate::single(GateName::S, 0));
  switch (axis) {
    case 'I':
    case 'Z': return Matrix::Identity(2, 2);
    case 'X': return h;
    case 'Y': return s * h;  // |0> -> |+i>
  }
  throw std::logic_error("unreachable");
}

Matrix unprep_matrix(char axis) {
  Matrix h = gate_matrix(Gate::single(GateName::H, 0));
  Matrix sdg = gate_matrix(Gate::single(GateName::Sdg, 0));
  switch (axis) {
    case 'I':
    case 'Z': return Matrix::Identity(2, 2);
    case 'X': return h;
    case 'Y': return h * sdg;  // Y eigenbasis onto Z
  }
  throw std::logic_error("unreachable");
}

std::vector<PauliString> all_nonidentity_bases(int n) {
  std::vector<PauliString> out;
  const std::size_t count = std::size_t{1} << (2 * n);
  for (std::size_t i = 1; i < count; ++i) out.push_back(PauliString::from_index(n, i));
  return out;
}

}  // namespace

CBSequence build_cb_sequence(const Cycle& cycle, int n, const PauliString& basis,
                             const std::vector<PauliString>& twirls) {
  if (cycle.kind != CycleKind::Hard) throw ValidationError("cb: cycle of interest must be hard");
  if (basis.is_identity_label())
    throw ValidationError("cb: basis must be non-identity on at least one qubit");
  if (twirls.empty()) throw ValidationError("cb: sequence length must be >= 1");

  CBSequence seq;
  seq.basis = basis;
  seq.m = static_cast<int>(twirls.size());
  seq.circuit.n = n;

  PauliString frame = basis;
  const std::string basis_label = basis.label();

  for (std::size_t k = 0; k < twirls.size(); ++k) {
    const PauliString& t = twirls[k];
    Cycle easy;
    easy.kind = CycleKind::Easy;
    const std::string t_label = t.label();
    for (int q = 0; q < n; ++q) {
      Matrix m = PauliString::from_label(std::string(1, t_label[static_cast<std::size_t>(q)])).dense();
      if (k == 0) m = m * prep_matrix(basis_label[static_cast<std::size_t>(q)]);
      easy.gates.push_back(fold_to_gate(q, m));
    }
    seq.circuit.cycles.push_back(easy);
    frame = pauli_mul(pauli_mul(t, frame), t);  // sign flips when anticommuting

    seq.circuit.cycles.push_back(cycle);
    frame = clifford_conjugate(cycle, frame);
  }

  Cycle final_easy;
  final_easy.kind = CycleKind::Easy;
  const std::string frame_label = frame.label();
  for (int q = 0; q < n; ++q)
    final_easy.gates.push_back(fold_to_gate(q, unprep_matrix(frame_label[static_cast<std::size_t>(q)])));
  seq.circuit.cycles.push_back(final_easy);

  Complex sign = frame.sign();
  if (std::abs(sign.imag()) > 1e-12) throw std::logic_error("cb: frame sign must be real");
  seq.expected_sign = sign.real();
  seq.final_frame = frame;
  validate_circuit(seq.circuit);
  return seq;
}

std::vector<CBSequence> generate_cb_sequences(const CBConfig& cfg, std::mt19937_64& rng) {
  if (cfg.lengths.size() < 2) throw ValidationError("cb: need at least two sequence lengths");
  for (int m : cfg.lengths)
    if (m < 1) throw ValidationError("cb: sequence lengths must be positive");
  std::vector<PauliString> bases = cfg.bases.empty() ? all_nonidentity_bases(cfg.n) : cfg.bases;
  std::vector<CBSequence> out;
  for (const PauliString& basis : bases) {
    for (int m : cfg.lengths) {
      for (int r = 0; r < std::max(cfg.randomizations_per_length, 1); ++r) {
        std::vector<PauliString> twirls;
        twirls.reserve(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) twirls.push_back(PauliString::sample_uniform(cfg.n, rng));
        out.push_back(build_cb_sequence(cfg.cycle, cfg.n, basis, twirls));
      }
    }
  }
  return out;
}

double signed_expectation(const CBSequence& seq, const ProbDist& dist) {
  const int n = dist.n;
  Eigen::Index mask = 0;
  for (int q = 0; q < n; ++q)
    if (seq.final_frame.x_bit(q) || seq.final_frame.z_bit(q))
      mask |= Eigen::Index{1} << (n - 1 - q);
  double acc = 0;
  for (Eigen::Index x = 0; x < dist.probs.size(); ++x) {
    int parity = std::popcount(static_cast<uint64_t>(x & mask)) & 1;
    acc += dist.probs[x] * (parity ? -1.0 : 1.0);
  }
  return seq.expected_sign * acc;
}

namespace {

struct GnFit {
  double a = 0, p = 0, ssr = 0;
  double a_err = 0, p_err = 0;
  bool ok = false;
};

GnFit gauss_newton_exp(const std::vector<std::pair<int, double>>& pts, double a0, double p0) {
  double a = a0, p = std::clamp(p0, 1e-9, 1.0);
  double lambda = 1e-6;
  auto ssr_of = [&](double aa, double pp) {
    double s = 0;
    for (auto& [m, y] : pts) {
      double r = aa * std::pow(pp, m) - y;
      s += r * r;
    }
    return s;
  };
  double ssr = ssr_of(a, p);
  for (int iter = 0; iter < 200; ++iter) {
    double j11 = 0, j12 = 0, j22 = 0, g1 = 0, g2 = 0;
    for (auto& [m, y] : pts) {
      double pm = std::pow(p, m);
      double f = a * pm;
      double d_a = pm;
      double d_p = (m == 0 || p == 0) ? 0.0 : a * m * pm / p;
      double r = f - y;
      j11 += d_a * d_a;
      j12 += d_a * d_p;
      j22 += d_p * d_p;
      g1 += d_a * r;
      g2 += d_p * r;
    }
    double det = (j11 + lambda) * (j22 + lambda) - j12 * j12;
    if (std::abs(det) < 1e-300) break;
    double da = -((j22 + lambda) * g1 - j12 * g2) / det;
    double dp = -(-j12 * g1 + (j11 + lambda) * g2) / det;
    double a_new = a + da;
    double p_new = std::clamp(p + dp, -1.0, 1.0);
    double ssr_new = ssr_of(a_new, p_new);
    if (ssr_new < ssr) {
      a = a_new;
      p = p_new;
      double improvement = ssr - ssr_new;
      ssr = ssr_new;
      lambda = std::max(lambda * 0.3, 1e-12);
      if (improvement < 1e-16 * (1 + ssr)) break;
    } else {
      lambda *= 10;
      if (lambda > 1e8) break;
    }
  }
  GnFit out;
  out.a = a;
  out.p = p;
  out.ssr = ssr;
  // covariance from the final Jacobian
  double j11 = 0, j12 = 0, j22 = 0;
  for (auto& [m, y] : pts) {
    (void)y;
    double pm = std::pow(p, m);
    double d_a = pm;
    double d_p = (m == 0 || p == 0) ? 0.0 : a * m * pm / p;
    j11 += d_a * d_a;
    j12 += d_a * d_p;
    j22 += d_p * d_p;
  }
  double det = j11 * j22 - j12 * j12;
  if (pts.size() > 2 && det > 1e-300) {
    double sigma2 = ssr / static_cast<double>(pts.size() - 2);
    out.a_err = std::sqrt(std::max(sigma2 * j22 / det, 0.0));
    out.p_err = std::sqrt(std::max(sigma2 * j11 / det, 0.0));
  }
  out.ok = true;
  return out;
}

}  // namespace

ExpFit fit_exponential(const std::vector<std::pair<int, double>>& points) {
  std::vector<int> ms;
  for (auto& [m, y] : points) {
    (void)y;
    if (std::find(ms.begin(), ms.end(), m) == ms.end()) ms.push_back(m);
  }
  if (ms.size() < 2) throw ValidationError("fit_exponential: need at least two distinct lengths");
  double maxabs = 0;
  for (auto& [m, y] : points) {
    (void)m;
    maxabs = std::max(maxabs, std::abs(y));
  }
  if (maxabs < 1e-12) throw ValidationError("fit_exponential: all means are zero (degenerate)");

  auto attempt = [&](bool negate_odd) {
    std::vector<std::pair<int, double>> pts = points;
    if (negate_odd)
      for (auto& [m, y] : pts)
        if (m % 2) y = -y;
    // log-linear initialization on |y|
    std::vector<double> xs, ys;
    for (auto& [m, y] : pts)
      if (std::abs(y) > 1e-14) {
        xs.push_back(m);
        ys.push_back(std::log(std::abs(y)));
      }
    double p0 = 0.9, a0 = maxabs;
    if (xs.size() >= 2) {
      LinearFit lf = linear_fit(xs, ys);
      p0 = std::clamp(std::exp(lf.slope), 1e-6, 1.0);
      a0 = std::exp(lf.intercept);
    }
    // sign of A from the smallest-m point
    auto smallest = *std::min_element(pts.begin(), pts.end());
    if (smallest.second < 0) a0 = -a0;
    return gauss_newton_exp(pts, a0, p0);
  };

  bool any_negative = std::any_of(points.begin(), points.end(),
                                  [](const auto& pt) { return pt.second < 0; });
  GnFit best = attempt(false);
  if (any_negative) {
    GnFit alt = attempt(true);
    if (alt.ssr < best.ssr) {
      alt.p = -alt.p;
      best = alt;
    }
  }
  ExpFit out;
  out.a = best.a;
  out.p = best.p;
  out.a_err = best.a_err;
  out.p_err = best.p_err;
  return out;
}

Eigen::VectorXd cycle_ptm_diagonal(const NoiseModel& nm, const Cycle& cycle, int n) {
  const Eigen::Index len = Eigen::Index{1} << (2 * n);
  Eigen::VectorXd diag = Eigen::VectorXd::Ones(len);
  for (const NoiseBody& body : nm.bodies_for_cycle(cycle, n)) {
    Eigen::VectorXd body_diag = body.channel.ptm_diagonal();
    for (Eigen::Index idx = 0; idx < len; ++idx) {
      Eigen::Index sub = 0;
      for (int q : body.qubits) {
        int digit = static_cast<int>((idx >> (2 * (n - 1 - q))) & 3);
        sub = (sub << 2) | digit;
      }
      diag[idx] *= body_diag[sub];
    }
  }
  return diag;
}

double cycle_infidelity_analytic(const NoiseModel& nm, const Cycle& cycle, int n) {
  return 1.0 - cycle_ptm_diagonal(nm, cycle, n).mean();
}

namespace {

// Infinite-randomization decay values, exact: the sign-corrected twirl
// average kills every Pauli component except the tracked frame, so the decay
// is the product of PTM diagonal entries along the frame orbit, scaled by
// the readout attenuation of the final frame.
std::vector<std::pair<int, double>> analytic_decay_points(const CBConfig& cfg, const NoiseModel& nm,
                                                          const Eigen::VectorXd& diag,
                                                          const PauliString& basis) {
  int max_m = *std::max_element(cfg.lengths.begin(), cfg.lengths.end());
  std::vector<double> partial(static_cast<std::size_t>(max_m) + 1, 1.0);
  std::vector<PauliString> frames(static_cast<std::size_t>(max_m) + 1, basis);
  PauliString frame = basis;
  for (int k = 1; k <= max_m; ++k) {
    frame = clifford_conjugate(cfg.cycle, frame);
    frames[static_cast<std::size_t>(k)] = frame;
    partial[static_cast<std::size_t>(k)] =
        partial[static_cast<std::size_t>(k - 1)] * diag[static_cast<Eigen::Index>(frame.index())];
  }
  std::vector<std::pair<int, double>> points;
  for (int m : cfg.lengths) {
    double a = 1.0;
    const PauliString& final_frame = frames[static_cast<std::size_t>(m)];
    for (int q = 0; q < cfg.n; ++q) {
      if (final_frame.x_bit(q) || final_frame.z_bit(q)) {
        ReadoutConfusion r = nm.readout_for(q);
        a *= r.p00 + r.p11 - 1.0;
      }
    }
    points.emplace_back(m, a * partial[static_cast<std::size_t>(m)]);
  }
  return points;
}

}  // namespace

CBResult run_cb(const CBConfig& cfg, const NoiseModel& nm, uint64_t seed) {
  std::vector<int> distinct;
  for (int m : cfg.lengths) {
    if (m < 1) throw ValidationError("cb: sequence lengths must be positive");
    if (std::find(distinct.begin(), distinct.end(), m) == distinct.end()) distinct.push_back(m);
  }
  if (distinct.size() < 2) throw ValidationError("cb: need at least two distinct sequence lengths");

  CBResult result;
  result.n = cfg.n;
  result.signature = cycle_signature(cfg.cycle);
  result.cycle = cfg.cycle;
  result.e_f_analytic = cycle_infidelity_analytic(nm, cfg.cycle, cfg.n);

  std::vector<PauliString> bases = cfg.bases.empty() ? all_nonidentity_bases(cfg.n) : cfg.bases;

  if (cfg.randomizations_per_length == 0) {
    Eigen::VectorXd diag = cycle_ptm_diagonal(nm, cfg.cycle, cfg.n);
    for (const PauliString& basis : bases) {
      PauliDecay decay;
      decay.basis = basis;
      decay.points = analytic_decay_points(cfg, nm, diag, basis);
      for (auto& [m, v] : decay.points) {
        (void)m;
        decay.raw.push_back({v});
      }
      ExpFit fit = fit_exponential(decay.points);
      decay.amplitude = fit.a;
      decay.p = fit.p;
      decay.amplitude_err = fit.a_err;
      decay.p_err = fit.p_err;
      result.decays.push_back(std::move(decay));
    }
  } else {
    SimEngine engine(&nm, cfg.n);
    std::mt19937_64 rng = child_rng(seed, 1);
    std::mt19937_64 shot_rng = child_rng(seed, 2);
    for (const PauliString& basis : bases) {
      PauliDecay decay;
      decay.basis = basis;
      for (int m : cfg.lengths) {
        std::vector<double> cell;
        for (int r = 0; r < cfg.randomizations_per_length; ++r) {
          std::vector<PauliString> twirls;
          for (int k = 0; k < m; ++k) twirls.push_back(PauliString::sample_uniform(cfg.n, rng));
          CBSequence seq = build_cb_sequence(cfg.cycle, cfg.n, basis, twirls);
          ProbDist dist = measure_distribution(engine.run(seq.circuit), nm.readout());
          if (cfg.shots_per_circuit > 0)
            dist = counts_to_probs(sample_counts(dist, cfg.shots_per_circuit, shot_rng));
          cell.push_back(signed_expectation(seq, dist));
        }
        double mean = 0;
        for (double v : cell) mean += v;
        mean /= static_cast<double>(cell.size());
        decay.points.emplace_back(m, mean);
        decay.raw.push_back(std::move(cell));
      }
      ExpFit fit = fit_exponential(decay.points);
      decay.amplitude = fit.a;
      decay.p = fit.p;
      decay.amplitude_err = fit.a_err;
      decay.p_err = fit.p_err;
      result.decays.push_back(std::move(decay));
    }
  }

  const double dim4 = static_cast<double>(Eigen::Index{1} << (2 * cfg.n));
  auto ef_from_ps = [dim4](const std::vector<double>& ps) {
    double sum = 1.0;  // identity eigenvalue
    for (double p : ps) sum += p;
    return 1.0 - sum / dim4;
  };
  std::vector<double> ps;
  for (const auto& d : result.decays) ps.push_back(d.p);
  result.e_f = ef_from_ps(ps);

  // bootstrap over randomizations within each (basis, m) cell
  bool has_variance = false;
  for (const auto& d : result.decays)
    for (const auto& cell : d.raw)
      if (cell.size() > 1) has_variance = true;
  if (has_variance && cfg.bootstrap_resamples > 0) {
    std::mt19937_64 brng = child_rng(seed, 3);
    std::vector<double> efs;
    for (int b = 0; b < cfg.bootstrap_resamples; ++b) {
      std::vector<double> ps_b;
      for (const auto& d : result.decays) {
        std::vector<std::pair<int, double>> pts;
        for (std::size_t mi = 0; mi < d.points.size(); ++mi) {
          const auto& cell = d.raw[mi];
          double mean = 0;
          for (std::size_t k = 0; k < cell.size(); ++k)
            mean += cell[brng() % cell.size()];
          mean /= static_cast<double>(cell.size());
          pts.emplace_back(d.points[mi].first, mean);
        }
        try {
          ps_b.push_back(fit_exponential(pts).p);
        } catch (const ValidationError&) {
          ps_b.push_back(d.p);
        }
      }
      efs.push_back(ef_from_ps(ps_b));
    }
    std::sort(efs.begin(), efs.end());
    result.e_f_low = efs[static_cast<std::size_t>(0.025 * (efs.size() - 1))];
    result.e_f_high = efs[static_cast<std::size_t>(0.975 * (efs.size() - 1))];
  } else {
    result.e_f_low = result.e_f;
    result.e_f_high = result.e_f;
  }
  return result;
}

CERResult reconstruct_error_rates(const std::vector<PauliDecay>& decays, int n) {
  const Eigen::Index len = Eigen::Index{1} << (2 * n);
  Eigen::VectorXd p = Eigen::VectorXd::Zero(len);
  std::vector<bool> seen(static_cast<std::size_t>(len), false);
  p[0] = 1.0;
  seen[0] = true;
  for (const auto& d : decays) {
    p[static_cast<Eigen::Index>(d.basis.index())] = d.p;
    seen[d.basis.index()] = true;
  }
  for (bool s : seen)
    if (!s) throw ValidationError("reconstruct_error_rates: missing bases");

  PauliProbabilityVector c = walsh_hadamard_inverse(PauliEigenvalueVector{n, p});
  CERResult out;
  out.n = n;
  double clipped = 0;
  for (Eigen::Index i = 0; i < c.c.size(); ++i) {
    if (c.c[i] < 0) {
      clipped -= c.c[i];
      c.c[i] = 0;
    }
  }
  c.c /= c.c.sum();
  out.c = c;
  out.clipped_mass = clipped;
  out.e_f = 1.0 - c.c[0];

  // single-qubit marginals, then two-qubit marginals
  static const char kAxes[3] = {'X', 'Y', 'Z'};
  for (int q = 0; q < n; ++q) {
    for (char axis : kAxes) {
      Marginal m;
      m.error_label = std::string(1, axis);
      m.qubits = {q};
      m.rate = marginal_rate(out.c, m.qubits, m.error_label);
      out.marginals.push_back(std::move(m));
    }
  }
  static const char kAll[4] = {'I', 'X', 'Y', 'Z'};
  for (int q0 = 0; q0 < n; ++q0) {
    for (int q1 = q0 + 1; q1 < n; ++q1) {
      for (char a : kAll) {
        for (char b : kAll) {
          if (a == 'I' && b == 'I') continue;
          Marginal m;
          m.error_label = std::string{a, b};
          m.qubits = {q0, q1};
          m.rate = marginal_rate(out.c, m.qubits, m.error_label);
          out.marginals.push_back(std::move(m));
        }
      }
    }
  }
  return out;
}

CERResult reconstruct_error_rates_with_ci(const std::vector<PauliDecay>& decays, int n,
                                          int resamples, uint64_t seed) {
  CERResult out = reconstruct_error_rates(decays, n);
  bool has_variance = false;
  for (const auto& d : decays)
    for (const auto& cell : d.raw)
      if (cell.size() > 1) has_variance = true;
  if (!has_variance || resamples <= 0) {
    for (auto& m : out.marginals) {
      m.ci_low = m.rate;
      m.ci_high = m.rate;
    }
    return out;
  }

  std::mt19937_64 rng = child_rng(seed, 11);
  std::vector<std::vector<double>> samples(out.marginals.size());
  for (int b = 0; b < resamples; ++b) {
    std::vector<PauliDecay> resampled = decays;
    for (std::size_t di = 0; di < resampled.size(); ++di) {
      PauliDecay& d = resampled[di];
      for (std::size_t mi = 0; mi < d.points.size(); ++mi) {
        const auto& cell = decays[di].raw[mi];
        double mean = 0;
        for (std::size_t k = 0; k < cell.size(); ++k) mean += cell[rng() % cell.size()];
        d.points[mi].second = mean / static_cast<double>(cell.size());
      }
      try {
        d.p = fit_exponential(d.points).p;
      } catch (const ValidationError&) {
      }
    }
    CERResult rb = reconstruct_error_rates(resampled, n);
    for (std::size_t i = 0; i < rb.marginals.size(); ++i)
      samples[i].push_back(rb.marginals[i].rate);
  }
  for (std::size_t i = 0; i < out.marginals.size(); ++i) {
    std::sort(samples[i].begin(), samples[i].end());
    out.marginals[i].ci_low = samples[i][static_cast<std::size_t>(0.025 * (samples[i].size() - 1))];
    out.marginals[i].ci_high = samples[i][static_cast<std::size_t>(0.975 * (samples[i].size() - 1))];
  }
  return out;
}

double marginal_rate(const PauliProbabilityVector& c, const std::vector<int>& qubits,
                     const std::string& label) {
  if (qubits.size() != label.size())
    throw ValidationError("marginal_rate: label length must match subset size");
  double acc = 0;
  const Eigen::Index len = c.c.size();
  for (Eigen::Index idx = 0; idx < len; ++idx) {
    bool match = true;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      int digit = static_cast<int>((idx >> (2 * (c.n - 1 - qubits[i]))) & 3);
      static const char kChars[4] = {'I', 'X', 'Y', 'Z'};
      if (kChars[digit] != label[i]) {
        match = false;
        break;
      }
    }
    if (match) acc += c.c[idx];
  }
  return acc;
}

std::pair<double, double> bootstrap_ci(const std::vector<double>& records,
                                       const std::function<double(const std::vector<double>&)>& statistic,
                                       int resamples, uint64_t seed) {
  if (records.empty()) throw ValidationError("bootstrap_ci: no records");
  std::mt19937_64 rng(mix_seed(seed, 0));
  std::vector<double> stats;
  stats.reserve(static_cast<std::size_t>(resamples));
  std::vector<double> resampled(records.size());
  for (int b = 0; b < resamples; ++b) {
    for (std::size_t i = 0; i < records.size(); ++i) resampled[i] = records[rng() % records.size()];
    stats.push_back(statistic(resampled));
  }
  std::sort(stats.begin(), stats.end());
  double low = stats[static_cast<std::size_t>(0.025 * (stats.size() - 1))];
  double high = stats[static_cast<std::size_t>(0.975 * (stats.size() - 1))];
  return {low, high};
}

std::string cb_result_to_json(const CBResult& r) {
  json j;
  j["n"] = r.n;
  j["signature"] = r.signature;
  j["cycle"] = json::parse(cycle_to_json(r.cycle, r.n));
  j["e_f"] = r.e_f;
  j["e_f_ci"] = {r.e_f_low, r.e_f_high};
  j["e_f_analytic"] = r.e_f_analytic;
  j["decays"] = json::array();
  for (const auto& d : r.decays) {
    json jd;
    jd["basis"] = d.basis.label();
    jd["points"] = json::array();
    for (auto& [m, v] : d.points) jd["points"].push_back({m, v});
    jd["raw"] = d.raw;
    jd["a"] = d.amplitude;
    jd["p"] = d.p;
    jd["a_err"] = d.amplitude_err;
    jd["p_err"] = d.p_err;
    j["decays"].push_back(jd);
  }
  return j.dump(2);
}

CBResult cb_result_from_json(const std::string& text) {
  json j = json::parse(text);
  CBResult r;
  r.n = j.at("n").get<int>();
  r.signature = j.at("signature").get<std::string>();
  if (j.contains("cycle")) r.cycle = cycle_from_json(j.at("cycle").dump()).first;
  r.e_f = j.at("e_f").get<double>();
  r.e_f_low = j.at("e_f_ci")[0].get<double>();
  r.e_f_high = j.at("e_f_ci")[1].get<double>();
  r.e_f_analytic = j.at("e_f_analytic").get<double>();
  for (const auto& jd : j.at("decays")) {
    PauliDecay d;
    d.basis = PauliString::from_label(jd.at("basis").get<std::string>());
    for (const auto& pt : jd.at("points"))
      d.points.emplace_back(pt[0].get<int>(), pt[1].get<double>());
    d.raw = jd.at("raw").get<std::vector<std::vector<double>>>();
    d.amplitude = jd.at("a").get<double>();
    d.p = jd.at("p").get<double>();
    d.amplitude_err = jd.at("a_err").get<double>();
    d.p_err = jd.at("p_err").get<double>();
    r.decays.push_back(std::move(d));
  }
  return r;
}

std::string cer_result_to_json(const CERResult& r) {
  json j;
  j["n"] = r.n;
  j["signature"] = r.signature;
  j["c"] = std::vector<double>(r.c.c.data(), r.c.c.data() + r.c.c.size());
  j["clipped_mass"] = r.clipped_mass;
  j["e_f"] = r.e_f;
  j["marginals"] = json::array();
  for (const auto& m : r.marginals) {
    j["marginals"].push_back(json{{"error_label", m.error_label},
                                  {"qubits", m.qubits},
                                  {"rate", m.rate},
                                  {"ci_low", m.ci_low},
                                  {"ci_high", m.ci_high}});
  }
  return j.dump(2);
}

}  // namespace rckit
