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

#include <vector>

#include "rckit/pauli.hpp"

namespace rckit {

/// CPTP map on a small number of qubits, held as a Kraus set with a cached
/// PTM. Immutable once built.
class Channel {
 public:
  static Channel identity(int n_body);
  static Channel from_kraus(int n_body, std::vector<Matrix> kraus);

  int n_body() const { return n_body_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  const Ptm& ptm() const { return ptm_; }
  Eigen::VectorXd ptm_diagonal() const { return ptm_.m.diagonal(); }

  Matrix apply(const Matrix& rho) const;
  Matrix choi() const;

  // Sum K†K = I to tol and Choi eigenvalues above -tol.
  bool is_cptp(double tol = 1e-10) const;

  // The diagonal-PTM channel with the same Pauli-basis eigenvalues; this is
  // what averaging over all Pauli twirls produces.
  Channel pauli_twirled() const;

 private:
  Channel() = default;
  int n_body_ = 0;
  std::vector<Matrix> kraus_;
  Ptm ptm_;
};

// Stochastic Pauli channel sum_i q_i P_i rho P_i with Kraus set
// {sqrt(q_i) P_i}. Throws on negative entries or sum != 1.
Channel make_pauli_channel(const PauliProbabilityVector& q);

// Unitary channel exp(-i sum_i h_i P_i) over the non-identity Paulis in
// index order; h has length 4^n_body - 1.
Channel make_coherent(const Eigen::VectorXd& h);

// S(q, h): the coherent rotation applied after the Pauli channel, so
// PTM(S) = PTM(U_h) PTM(K_q).
Channel compose_sqh(const PauliProbabilityVector& q, const Eigen::VectorXd& h);

// ||unital PTM block||_F^2 / (4^n - 1): 1 for unitary channels, 0 for the
// fully depolarizing channel.
double unitarity(const Channel& ch);

}  // namespace rckit
