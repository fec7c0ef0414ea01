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

#include "rckit/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "rckit/errors.hpp"
#include "rckit/gates.hpp"
#include "rckit/rng.hpp"

namespace rckit {

namespace {

double normal_cdf(double x, double mu, double sigma) {
  return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

double normal_pdf(double x, double mu, double sigma) {
  double z = (x - mu) / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * 3.14159265358979323846));
}

}  // namespace

double tvd(const ProbDist& p, const ProbDist& q) {
  if (p.n != q.n) throw ValidationError("tvd: mismatched qubit counts");
  return 0.5 * (p.probs - q.probs).cwiseAbs().sum();
}

double tvd(const CountDist& p, const ProbDist& q) { return tvd(counts_to_probs(p), q); }

double tvd(const CountDist& p, const CountDist& q) {
  return tvd(counts_to_probs(p), counts_to_probs(q));
}

double uniformity_distance(const ProbDist& p_ideal) {
  ProbDist uniform;
  uniform.n = p_ideal.n;
  uniform.probs =
      Eigen::VectorXd::Constant(p_ideal.probs.size(), 1.0 / static_cast<double>(p_ideal.probs.size()));
  return tvd(p_ideal, uniform);
}

double trace_distance(const Matrix& rho, const Matrix& sigma) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9 ||
      (sigma - sigma.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
    throw ValidationError("trace_distance: non-Hermitian input");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho - sigma);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double state_fidelity(const Matrix& rho, const Vector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-9) throw ValidationError("state_fidelity: psi not normalized");
  return (psi.adjoint() * rho * psi)(0, 0).real();
}

double purity(const Matrix& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
    throw ValidationError("purity: non-Hermitian input");
  return (rho * rho).trace().real();
}

BlochState bloch_from_tomography(const CountDist& counts_x, const CountDist& counts_y,
                                 const CountDist& counts_z) {
  auto axis = [](const CountDist& c) {
    if (c.n != 1) throw ValidationError("bloch_from_tomography: single-qubit counts expected");
    if (c.shots == 0) throw ValidationError("bloch_from_tomography: empty counts");
    double n0 = static_cast<double>(c.counts[0]);
    double n1 = static_cast<double>(c.counts[1]);
    return (n0 - n1) / static_cast<double>(c.shots);
  };
  BlochState state;
  state.r = Eigen::Vector3d(axis(counts_x), axis(counts_y), axis(counts_z));
  state.purity = 0.5 * (1.0 + state.r.squaredNorm());
  return state;
}

double bloch_fidelity(const BlochState& state, const Eigen::Vector3d& ideal) {
  return 0.5 * (1.0 + state.r.dot(ideal));
}

double process_from_avg_infidelity(double r, int n) {
  double d = static_cast<double>(Eigen::Index{1} << n);
  return r * (d + 1) / d;
}

double avg_from_process_infidelity(double e_f, int n) {
  double d = static_cast<double>(Eigen::Index{1} << n);
  return e_f * d / (d + 1);
}

double process_infidelity(const Channel& ch) {
  return 1.0 - ch.ptm().m.trace() / static_cast<double>(ch.ptm().m.rows());
}

double avg_gate_infidelity(const Channel& ch) {
  return avg_from_process_infidelity(process_infidelity(ch), ch.n_body());
}

WorstCaseTvd worst_case_tvd(const Channel& ch, int n_probe_states, uint64_t seed) {
  const int n = ch.n_body();
  if (n > 2) throw ValidationError("worst_case_tvd: one- or two-qubit channels only");
  if (n_probe_states < 1) throw ValidationError("worst_case_tvd: need at least one probe state");

  // per-qubit rotations into the computational basis for X/Y/Z measurements
  Matrix h = gate_matrix(Gate::single(GateName::H, 0));
  Matrix sdg = gate_matrix(Gate::single(GateName::Sdg, 0));
  std::vector<std::pair<char, Matrix>> axis_rot = {
      {'X', h}, {'Y', h * sdg}, {'Z', Matrix::Identity(2, 2)}};

  std::mt19937_64 rng(mix_seed(seed, 0));
  WorstCaseTvd best;
  for (int s = 0; s < n_probe_states; ++s) {
    // Haar product state
    Vector psi = Vector::Ones(1);
    for (int q = 0; q < n; ++q) {
      Vector local(2);
      local << Complex(standard_normal(rng), standard_normal(rng)),
          Complex(standard_normal(rng), standard_normal(rng));
      local /= local.norm();
      Vector next(psi.size() * 2);
      for (Eigen::Index i = 0; i < psi.size(); ++i) {
        next[2 * i] = psi[i] * local[0];
        next[2 * i + 1] = psi[i] * local[1];
      }
      psi = next;
    }
    Matrix rho_ideal = psi * psi.adjoint();
    Matrix rho_noisy = ch.apply(rho_ideal);

    const int n_bases = n == 1 ? 3 : 9;
    for (int b = 0; b < n_bases; ++b) {
      Matrix rot = Matrix::Identity(1, 1);
      std::string label;
      int rem = b;
      for (int q = 0; q < n; ++q) {
        auto& [axis_char, axis_m] = axis_rot[static_cast<std::size_t>(rem % 3)];
        label.push_back(axis_char);
        rot = kron(rot, axis_m);
        rem /= 3;
      }
      Eigen::VectorXd pi = (rot * rho_ideal * rot.adjoint()).diagonal().real();
      Eigen::VectorXd pn = (rot * rho_noisy * rot.adjoint()).diagonal().real();
      double d = 0.5 * (pi - pn).cwiseAbs().sum();
      if (d > best.value) {
        best.value = d;
        best.argmax_state = psi;
        best.argmax_basis = label;
      }
    }
    if (best.argmax_state.size() == 0) best.argmax_state = psi;
  }
  return best;
}

double pearson_r(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3)
    throw ValidationError("pearson_r: need at least 3 paired points");
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0 || syy == 0) throw ValidationError("pearson_r: zero variance");
  return sxy / std::sqrt(sxx * syy);
}

double overlapping_index(const std::vector<double>& sample_a, const std::vector<double>& sample_b) {
  auto fit = [](const std::vector<double>& xs) {
    if (xs.size() < 2) throw ValidationError("overlapping_index: need at least 2 points");
    double mu = 0;
    for (double x : xs) mu += x;
    mu /= static_cast<double>(xs.size());
    double var = 0;
    for (double x : xs) var += (x - mu) * (x - mu);
    var /= static_cast<double>(xs.size());
    return std::make_pair(mu, std::sqrt(std::max(var, 1e-300)));
  };
  auto [m1, s1] = fit(sample_a);
  auto [m2, s2] = fit(sample_b);

  // crossing points of the two fitted densities
  std::vector<double> cross;
  if (std::abs(s1 - s2) < 1e-12 * std::max(s1, s2)) {
    if (std::abs(m1 - m2) < 1e-300) return 1.0;
    cross.push_back(0.5 * (m1 + m2));
  } else {
    double a = 1.0 / (2 * s2 * s2) - 1.0 / (2 * s1 * s1);
    double b = m1 / (s1 * s1) - m2 / (s2 * s2);
    double c = m2 * m2 / (2 * s2 * s2) - m1 * m1 / (2 * s1 * s1) + std::log(s2 / s1);
    double disc = b * b - 4 * a * c;
    if (disc > 0) {
      cross.push_back((-b - std::sqrt(disc)) / (2 * a));
      cross.push_back((-b + std::sqrt(disc)) / (2 * a));
      std::sort(cross.begin(), cross.end());
    }
  }

  // integrate the pointwise minimum segment by segment
  double lo = std::min(m1, m2) - 12 * std::max(s1, s2);
  double hi = std::max(m1, m2) + 12 * std::max(s1, s2);
  std::vector<double> edges = {lo};
  for (double c : cross)
    if (c > lo && c < hi) edges.push_back(c);
  edges.push_back(hi);

  double overlap = 0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double mid = 0.5 * (edges[i] + edges[i + 1]);
    bool first_smaller = normal_pdf(mid, m1, s1) <= normal_pdf(mid, m2, s2);
    double mu = first_smaller ? m1 : m2;
    double sg = first_smaller ? s1 : s2;
    overlap += normal_cdf(edges[i + 1], mu, sg) - normal_cdf(edges[i], mu, sg);
  }
  return std::clamp(overlap, 0.0, 1.0);
}

bool expectation_error_bound_check(const ProbDist& p, const ProbDist& q,
                                   const Eigen::VectorXd& observable) {
  if (observable.size() != p.probs.size())
    throw ValidationError("expectation_error_bound_check: observable size mismatch");
  double lhs = std::abs(p.probs.dot(observable) - q.probs.dot(observable));
  double norm = observable.cwiseAbs().maxCoeff();
  return lhs <= 2.0 * tvd(p, q) * norm + 1e-12;
}

LinearFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw ValidationError("linear_fit: need paired data");
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0) throw ValidationError("linear_fit: degenerate x values");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double resid = ys[i] - (f.intercept + f.slope * xs[i]);
    ss_res += resid * resid;
  }
  f.r_squared = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
  return f;
}

}  // namespace rckit
