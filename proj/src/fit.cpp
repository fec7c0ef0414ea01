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

#include "rckit/fit.hpp"

#include <algorithm>
#include <cmath>

#include "rckit/errors.hpp"
#include "rckit/rng.hpp"

namespace rckit {

namespace {

const std::vector<Matrix>& pauli_table(int n) {
  static const std::vector<Matrix> k1 = [] {
    std::vector<Matrix> t;
    for (std::size_t i = 0; i < 4; ++i) t.push_back(PauliString::from_index(1, i).dense());
    return t;
  }();
  static const std::vector<Matrix> k2 = [] {
    std::vector<Matrix> t;
    for (std::size_t i = 0; i < 16; ++i) t.push_back(PauliString::from_index(2, i).dense());
    return t;
  }();
  if (n == 1) return k1;
  if (n == 2) return k2;
  throw ValidationError("fit: bodies larger than two qubits are not supported");
}

// diagonal of the PTM of exp(-i sum h_i P_i)
Eigen::VectorXd coherent_ptm_diagonal(const Eigen::VectorXd& h, int n) {
  const auto& paulis = pauli_table(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix ham = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < h.size(); ++i) ham += h[i] * paulis[static_cast<std::size_t>(i + 1)];
  Eigen::SelfAdjointEigenSolver<Matrix> es(ham);
  Vector phases(dim);
  for (Eigen::Index i = 0; i < dim; ++i) phases[i] = std::exp(Complex(0, -es.eigenvalues()[i]));
  Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

  Eigen::VectorXd diag(static_cast<Eigen::Index>(paulis.size()));
  for (std::size_t q = 0; q < paulis.size(); ++q) {
    Matrix t = paulis[q] * u * paulis[q] * u.adjoint();
    diag[static_cast<Eigen::Index>(q)] = t.trace().real() / static_cast<double>(dim);
  }
  return diag;
}

Eigen::VectorXd softmax(const Eigen::VectorXd& logits) {
  Eigen::VectorXd out = logits;
  double mx = out.maxCoeff();
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = std::exp(out[i] - mx);
  return out / out.sum();
}

}  // namespace

Eigen::VectorXd FitTarget::target_d() const {
  return Eigen::VectorXd::Ones(f.size()) - s0 * (Eigen::VectorXd::Ones(f.size()) - f);
}

double FitTarget::target_u() const {
  if (u_override) return *u_override;
  double fbar = target_d().mean();
  return 1.0 - (1.0 - s1) * (1.0 - fbar * fbar);
}

Eigen::VectorXd sqh_diagonal(const PauliProbabilityVector& q, const Eigen::VectorXd& h) {
  Eigen::VectorXd p = q.c;
  fwht_pauli_inplace(p);
  return coherent_ptm_diagonal(h, q.n).cwiseProduct(p);
}

double sqh_unitarity(const PauliProbabilityVector& q) {
  // the coherent factor's unital PTM block is orthogonal, so the unitarity
  // of S(q, h) is set by the Pauli part alone
  Eigen::VectorXd p = q.c;
  fwht_pauli_inplace(p);
  return p.tail(p.size() - 1).squaredNorm() / static_cast<double>(p.size() - 1);
}

double fit_objective(const FitTarget& target, const PauliProbabilityVector& q,
                     const Eigen::VectorXd& h) {
  Eigen::VectorXd d = sqh_diagonal(q, h);
  double u = sqh_unitarity(q);
  double obj = (d - target.target_d()).squaredNorm();
  double du = u - target.target_u();
  return obj + du * du;
}

FitResult fit_channel(const FitTarget& target, int n_starts, uint64_t seed) {
  const int n = target.n_body;
  const Eigen::Index len = Eigen::Index{1} << (2 * n);
  if (n < 1 || n > 2) throw ValidationError("fit_channel: n_body must be 1 or 2");
  if (target.f.size() != len) throw ValidationError("fit_channel: wrong f length");
  if (std::abs(target.f[0] - 1.0) > 1e-9)
    throw ValidationError("fit_channel: f[identity] must be 1");
  if (target.f.minCoeff() < -1.0 - 1e-9 || target.f.maxCoeff() > 1.0 + 1e-9)
    throw ValidationError("fit_channel: f entries must lie in [-1, 1]");

  const Eigen::Index n_logits = len;
  const Eigen::Index n_h = len - 1;
  const Eigen::Index dim = n_logits + n_h;

  auto objective = [&](const Eigen::VectorXd& theta) {
    PauliProbabilityVector q{n, softmax(theta.head(n_logits))};
    Eigen::VectorXd h = theta.tail(n_h);
    return fit_objective(target, q, h);
  };
  const double grad_step = 1e-6;
  auto gradient = [&](const Eigen::VectorXd& theta) {
    Eigen::VectorXd g(dim);
    Eigen::VectorXd probe = theta;
    for (Eigen::Index i = 0; i < dim; ++i) {
      probe[i] = theta[i] + grad_step;
      double fp = objective(probe);
      probe[i] = theta[i] - grad_step;
      double fm = objective(probe);
      probe[i] = theta[i];
      g[i] = (fp - fm) / (2 * grad_step);
    }
    return g;
  };

  // starting point: the Pauli channel matching the target diagonal
  Eigen::VectorXd d_target = target.target_d();
  Eigen::VectorXd c0 = d_target;
  fwht_pauli_inplace(c0);
  c0 /= static_cast<double>(len);
  Eigen::VectorXd base_logits(n_logits);
  for (Eigen::Index i = 0; i < n_logits; ++i)
    base_logits[i] = std::log(std::max(c0[i], 1e-10));

  FitResult best;
  best.residual = std::numeric_limits<double>::infinity();
  int total_iterations = 0;

  for (int start = 0; start < n_starts; ++start) {
    std::mt19937_64 rng = child_rng(seed, static_cast<uint64_t>(start));
    Eigen::VectorXd theta(dim);
    theta.head(n_logits) = base_logits;
    theta.tail(n_h).setZero();
    if (start > 0) {
      for (Eigen::Index i = 0; i < n_logits; ++i) theta[i] += 0.5 * standard_normal(rng);
      for (Eigen::Index i = 0; i < n_h; ++i)
        theta[n_logits + i] = 0.05 * standard_normal(rng);
    }

    double fval = objective(theta);
    Eigen::VectorXd g = gradient(theta);
    Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(dim, dim);
    int iter = 0;
    for (; iter < 400; ++iter) {
      if (fval < 1e-16 || g.norm() < 1e-13) break;
      Eigen::VectorXd dir = -hinv * g;
      if (dir.dot(g) > 0) {
        hinv = Eigen::MatrixXd::Identity(dim, dim);
        dir = -g;
      }
      // backtracking Armijo search
      double step = 1.0;
      double f_new = fval;
      Eigen::VectorXd theta_new = theta;
      bool moved = false;
      for (int ls = 0; ls < 40; ++ls) {
        theta_new = theta + step * dir;
        f_new = objective(theta_new);
        if (f_new <= fval + 1e-4 * step * g.dot(dir)) {
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
      Eigen::VectorXd g_new = gradient(theta_new);
      Eigen::VectorXd s = theta_new - theta;
      Eigen::VectorXd y = g_new - g;
      double sy = s.dot(y);
      if (sy > 1e-14) {
        Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(dim, dim);
        Eigen::MatrixXd left = eye - (s * y.transpose()) / sy;
        hinv = left * hinv * left.transpose() + (s * s.transpose()) / sy;
      }
      theta = theta_new;
      g = g_new;
      fval = f_new;
    }
    total_iterations += iter;

    if (fval < best.residual) {
      best.residual = fval;
      best.q = PauliProbabilityVector{n, softmax(theta.head(n_logits))};
      best.h = theta.tail(n_h);
    }
    if (best.residual < 1e-14) break;  // no point in more starts
  }

  best.iterations = total_iterations;
  if (best.residual >= 1e-10)
    throw FitFailedError("fit_channel: no start reached the success threshold", best.residual);
  best.channel = compose_sqh(best.q, best.h);
  return best;
}

PauliProbabilityVector marginalize_c(const PauliProbabilityVector& c, const std::vector<int>& qubits) {
  const int k = static_cast<int>(qubits.size());
  PauliProbabilityVector out;
  out.n = k;
  out.c = Eigen::VectorXd::Zero(Eigen::Index{1} << (2 * k));
  const Eigen::Index len = c.c.size();
  for (Eigen::Index idx = 0; idx < len; ++idx) {
    Eigen::Index sub = 0;
    for (int q : qubits) {
      int digit = static_cast<int>((idx >> (2 * (c.n - 1 - q))) & 3);
      sub = (sub << 2) | digit;
    }
    out.c[sub] += c.c[idx];
  }
  return out;
}

NoiseModel build_noise_model(const std::vector<CerInput>& cer_inputs, int n,
                             const ModelScales& scales, std::vector<ReadoutConfusion> readout,
                             bool pauli_model, uint64_t seed) {
  NoiseModel nm;
  uint64_t fit_index = 0;
  for (const CerInput& input : cer_inputs) {
    if (input.cer.n != n)
      throw ValidationError("build_noise_model: CER size does not match the system");
    // locate the entangling pair, if any
    std::vector<int> pair;
    for (const auto& g : input.cycle.gates)
      if (is_two_qubit(g.name)) pair = g.qubits;

    std::vector<std::vector<int>> subsets;
    if (!pair.empty()) subsets.push_back(pair);
    for (int q = 0; q < n; ++q)
      if (std::find(pair.begin(), pair.end(), q) == pair.end()) subsets.push_back({q});

    std::vector<NoiseBody> bodies;
    for (const auto& subset : subsets) {
      PauliProbabilityVector c_body = marginalize_c(input.cer.c, subset);
      if (pauli_model) {
        bodies.push_back(NoiseBody::make(subset, c_body,
                                         Eigen::VectorXd::Zero(c_body.c.size() - 1)));
        continue;
      }
      FitTarget target;
      target.n_body = static_cast<int>(subset.size());
      target.f = walsh_hadamard(c_body).p;
      target.s0 = subset.size() == 1 ? scales.s0_1q : scales.s0_2q;
      target.s1 = subset.size() == 1 ? scales.s1_1q : scales.s1_2q;
      FitResult fit = fit_channel(target, 8, mix_seed(seed, fit_index++));
      NoiseBody body = NoiseBody::make(subset, fit.q, fit.h);
      body.target_d = target.target_d();
      body.target_u = target.target_u();
      body.residual = fit.residual;
      bodies.push_back(std::move(body));
    }
    nm.add_cycle_rule(cycle_signature(input.cycle), std::move(bodies));
  }
  nm.set_readout(std::move(readout));
  return nm;
}

}  // namespace rckit
