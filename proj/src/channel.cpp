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

#include "rckit/channel.hpp"

#include <cmath>

#include "rckit/errors.hpp"

namespace rckit {

namespace {

int n_from_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) throw ValidationError("channel: not a qubit dimension");
  return n;
}

Matrix vec_column_stack(const Matrix& m) {
  Matrix v(m.rows() * m.cols(), 1);
  for (Eigen::Index j = 0; j < m.cols(); ++j) v.block(j * m.rows(), 0, m.rows(), 1) = m.col(j);
  return v;
}

}  // namespace

Channel Channel::identity(int n_body) {
  const Eigen::Index dim = Eigen::Index{1} << n_body;
  return from_kraus(n_body, {Matrix::Identity(dim, dim)});
}

Channel Channel::from_kraus(int n_body, std::vector<Matrix> kraus) {
  if (kraus.empty()) throw ValidationError("channel: empty Kraus set");
  const Eigen::Index dim = Eigen::Index{1} << n_body;
  for (const auto& k : kraus)
    if (k.rows() != dim || k.cols() != dim) throw ValidationError("channel: Kraus shape mismatch");
  Channel ch;
  ch.n_body_ = n_body;
  ch.kraus_ = std::move(kraus);
  ch.ptm_ = ptm_of_kraus(ch.kraus_, n_body);
  return ch;
}

Matrix Channel::apply(const Matrix& rho) const {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : kraus_) out += k * rho * k.adjoint();
  return out;
}

Matrix Channel::choi() const {
  const Eigen::Index dim = Eigen::Index{1} << n_body_;
  Matrix choi = Matrix::Zero(dim * dim, dim * dim);
  for (const auto& k : kraus_) {
    Matrix v = vec_column_stack(k);
    choi += v * v.adjoint();
  }
  return choi;
}

bool Channel::is_cptp(double tol) const {
  const Eigen::Index dim = Eigen::Index{1} << n_body_;
  Matrix sum = Matrix::Zero(dim, dim);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  if ((sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(choi());
  return es.eigenvalues().minCoeff() > -tol;
}

Channel Channel::pauli_twirled() const {
  PauliEigenvalueVector p{n_body_, ptm_diagonal()};
  PauliProbabilityVector c = walsh_hadamard_inverse(p);
  // The twirl of a CPTP map is CPTP, so c is a distribution up to numerical
  // noise; clamp the dust.
  double clipped = 0;
  for (Eigen::Index i = 0; i < c.c.size(); ++i) {
    if (c.c[i] < 0) {
      if (c.c[i] < -1e-9) throw ValidationError("pauli_twirled: significantly negative rate");
      clipped += c.c[i];
      c.c[i] = 0;
    }
  }
  c.c /= c.c.sum();
  return make_pauli_channel(c);
}

Channel make_pauli_channel(const PauliProbabilityVector& q) {
  const Eigen::Index len = Eigen::Index{1} << (2 * q.n);
  if (q.c.size() != len) throw ValidationError("make_pauli_channel: wrong vector length");
  if (q.c.minCoeff() < -1e-12) throw ValidationError("make_pauli_channel: negative entries");
  if (std::abs(q.c.sum() - 1.0) > 1e-9) throw ValidationError("make_pauli_channel: sum != 1");
  std::vector<Matrix> kraus;
  for (Eigen::Index i = 0; i < len; ++i) {
    double w = std::max(q.c[i], 0.0);
    if (w == 0.0) continue;
    kraus.push_back(std::sqrt(w) * PauliString::from_index(q.n, static_cast<std::size_t>(i)).dense());
  }
  return Channel::from_kraus(q.n, std::move(kraus));
}

Channel make_coherent(const Eigen::VectorXd& h) {
  if (!h.allFinite()) throw ValidationError("make_coherent: non-finite entries");
  const Eigen::Index len = h.size() + 1;
  int log2_len = n_from_dim(len);
  if (log2_len % 2 != 0 || log2_len == 0)
    throw ValidationError("make_coherent: h length must be 4^n - 1");
  int n = log2_len / 2;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix ham = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < h.size(); ++i)
    ham += h[i] * PauliString::from_index(n, static_cast<std::size_t>(i + 1)).dense();
  Eigen::SelfAdjointEigenSolver<Matrix> es(ham);
  Matrix u = es.eigenvectors();
  Vector phases(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    phases[i] = std::exp(Complex(0, -es.eigenvalues()[i]));
  Matrix expm = u * phases.asDiagonal() * u.adjoint();
  return Channel::from_kraus(n, {expm});
}

Channel compose_sqh(const PauliProbabilityVector& q, const Eigen::VectorXd& h) {
  if (h.size() + 1 != q.c.size())
    throw ValidationError("compose_sqh: q and h dimension mismatch");
  Channel pauli = make_pauli_channel(q);
  Channel coherent = make_coherent(h);
  std::vector<Matrix> kraus;
  const Matrix& u = coherent.kraus()[0];
  for (const auto& k : pauli.kraus()) kraus.push_back(u * k);
  return Channel::from_kraus(q.n, std::move(kraus));
}

double unitarity(const Channel& ch) {
  const Eigen::Index len = ch.ptm().m.rows();
  double norm2 = ch.ptm().m.bottomRightCorner(len - 1, len - 1).squaredNorm();
  return norm2 / static_cast<double>(len - 1);
}

}  // namespace rckit
