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

#include "rckit/simulate.hpp"

#include "rckit/errors.hpp"
#include "rckit/rng.hpp"

namespace rckit {

SimEngine::SimEngine(const NoiseModel* model, int n) : model_(model), n_(n) {
  if (n < 1 || n > 5) throw ValidationError("SimEngine: n must be in [1, 5]");
}

Matrix SimEngine::run(const Circuit& c) {
  const Eigen::Index dim = Eigen::Index{1} << n_;
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  return run_from(c, std::move(rho));
}

Matrix SimEngine::run_from(const Circuit& c, Matrix rho) {
  if (c.n != n_) throw ValidationError("SimEngine: circuit size mismatch");
  validate_circuit(c);
  for (const auto& cycle : c.cycles) {
    Matrix u = cycle_unitary(cycle, n_);
    rho = u * rho * u.adjoint();
    if (cycle.kind == CycleKind::Hard && model_ != nullptr) {
      const std::string sig = cycle_signature(cycle);
      auto it = cache_.find(sig);
      if (it == cache_.end()) {
        std::vector<std::vector<Matrix>> lifted;
        for (const auto& body : model_->bodies_for_cycle(cycle, n_)) {
          std::vector<Matrix> ops;
          for (const auto& k : body.channel.kraus()) ops.push_back(embed(k, body.qubits, n_));
          lifted.push_back(std::move(ops));
        }
        it = cache_.emplace(sig, std::move(lifted)).first;
      }
      for (const auto& body_ops : it->second) {
        Matrix next = Matrix::Zero(rho.rows(), rho.cols());
        for (const auto& k : body_ops) next += k * rho * k.adjoint();
        rho = std::move(next);
      }
    }
  }
  return rho;
}

Matrix simulate(const Circuit& c, const NoiseModel& nm) {
  SimEngine engine(&nm, c.n);
  return engine.run(c);
}

Matrix simulate_ideal(const Circuit& c) {
  SimEngine engine(nullptr, c.n);
  return engine.run(c);
}

ProbDist measure_distribution(const Matrix& rho, const std::vector<ReadoutConfusion>& readout) {
  const Eigen::Index dim = rho.rows();
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) throw ValidationError("measure_distribution: bad dimension");
  ProbDist d;
  d.n = n;
  d.probs = rho.diagonal().real();
  if (d.probs.minCoeff() < -1e-9 || std::abs(d.probs.sum() - 1.0) > 1e-8)
    throw ValidationError("measure_distribution: input is not a density matrix");
  for (int q = 0; q < n && q < static_cast<int>(readout.size()); ++q) {
    const ReadoutConfusion& r = readout[static_cast<std::size_t>(q)];
    if (r.p00 < 0 || r.p00 > 1 || r.p11 < 0 || r.p11 > 1)
      throw ValidationError("measure_distribution: confusion probabilities outside [0, 1]");
    const Eigen::Index bit = Eigen::Index{1} << (n - 1 - q);
    Eigen::VectorXd next = d.probs;
    for (Eigen::Index x0 = 0; x0 < dim; ++x0) {
      if (x0 & bit) continue;
      const Eigen::Index x1 = x0 | bit;
      double p0 = d.probs[x0], p1 = d.probs[x1];
      next[x0] = r.p00 * p0 + (1 - r.p11) * p1;
      next[x1] = (1 - r.p00) * p0 + r.p11 * p1;
    }
    d.probs = next;
  }
  return d;
}

CountDist sample_counts(const ProbDist& d, uint64_t shots, std::mt19937_64& rng) {
  if (shots == 0) throw ValidationError("sample_counts: shots must be positive");
  const Eigen::Index dim = d.probs.size();
  Eigen::VectorXd cdf(dim);
  double acc = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    acc += std::max(d.probs[i], 0.0);
    cdf[i] = acc;
  }
  CountDist out;
  out.n = d.n;
  out.counts.assign(static_cast<std::size_t>(dim), 0);
  out.shots = shots;
  for (uint64_t s = 0; s < shots; ++s) {
    double u = uniform01(rng) * acc;
    Eigen::Index lo = 0, hi = dim - 1;
    while (lo < hi) {
      Eigen::Index mid = (lo + hi) / 2;
      if (cdf[mid] <= u) lo = mid + 1;
      else hi = mid;
    }
    ++out.counts[static_cast<std::size_t>(lo)];
  }
  return out;
}

CountDist union_counts(const std::vector<CountDist>& parts) {
  if (parts.empty()) throw ValidationError("union_counts: empty input");
  CountDist out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].n != out.n) throw ValidationError("union_counts: mismatched qubit counts");
    for (std::size_t x = 0; x < out.counts.size(); ++x) out.counts[x] += parts[i].counts[x];
    out.shots += parts[i].shots;
  }
  return out;
}

ProbDist counts_to_probs(const CountDist& counts) {
  if (counts.shots == 0) throw ValidationError("counts_to_probs: no shots");
  ProbDist d;
  d.n = counts.n;
  d.probs.resize(static_cast<Eigen::Index>(counts.counts.size()));
  for (std::size_t i = 0; i < counts.counts.size(); ++i)
    d.probs[static_cast<Eigen::Index>(i)] =
        static_cast<double>(counts.counts[i]) / static_cast<double>(counts.shots);
  return d;
}

}  // namespace rckit
