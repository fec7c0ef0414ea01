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

#include "rckit/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace rckit {

namespace {

int phase_exponent(Complex phase) {
  if (std::abs(phase - Complex(1, 0)) < 1e-12) return 0;
  if (std::abs(phase - Complex(0, 1)) < 1e-12) return 1;
  if (std::abs(phase - Complex(-1, 0)) < 1e-12) return 2;
  if (std::abs(phase - Complex(0, -1)) < 1e-12) return 3;
  throw std::invalid_argument("PauliString: phase must be one of +1, -1, +i, -i");
}

int digit_of(const PauliString& p, int q) {
  int x = p.x_bit(q) ? 1 : 0;
  int z = p.z_bit(q) ? 1 : 0;
  if (x && z) return 2;  // Y
  if (x) return 1;       // X
  if (z) return 3;       // Z
  return 0;              // I
}

}  // namespace

PauliString PauliString::identity(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("PauliString: bad qubit count");
  PauliString p;
  p.n_ = n;
  return p;
}

PauliString PauliString::scalar(int n, Complex phase) {
  PauliString p = identity(n);
  p.phase2_ = phase_exponent(phase);
  return p;
}

PauliString PauliString::times_phase(Complex phase) const {
  PauliString p = *this;
  p.phase2_ = (p.phase2_ + phase_exponent(phase)) & 3;
  return p;
}

PauliString PauliString::from_label(const std::string& label) {
  PauliString p = identity(static_cast<int>(label.size()));
  for (int q = 0; q < p.n_; ++q) {
    switch (label[static_cast<std::size_t>(q)]) {
      case 'I': break;
      case 'X': p.x_ |= (1ull << q); break;
      case 'Y':
        p.x_ |= (1ull << q);
        p.z_ |= (1ull << q);
        p.phase2_ = (p.phase2_ + 1) & 3;
        break;
      case 'Z': p.z_ |= (1ull << q); break;
      default: throw std::invalid_argument("PauliString: bad label character");
    }
  }
  return p;
}

PauliString PauliString::from_index(int n, std::size_t index) {
  PauliString p = identity(n);
  std::size_t rem = index;
  for (int q = n - 1; q >= 0; --q) {
    int d = static_cast<int>(rem & 3);
    rem >>= 2;
    if (d == 1) p.x_ |= (1ull << q);
    if (d == 2) {
      p.x_ |= (1ull << q);
      p.z_ |= (1ull << q);
      p.phase2_ = (p.phase2_ + 1) & 3;
    }
    if (d == 3) p.z_ |= (1ull << q);
  }
  if (rem != 0) throw std::invalid_argument("PauliString: index out of range");
  return p;
}

PauliString PauliString::sample_uniform(int n, std::mt19937_64& rng) {
  std::size_t count = std::size_t{1} << (2 * n);
  return from_index(n, static_cast<std::size_t>(rng() % count));
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

std::size_t PauliString::index() const {
  std::size_t idx = 0;
  for (int q = 0; q < n_; ++q) idx = (idx << 2) | static_cast<std::size_t>(digit_of(*this, q));
  return idx;
}

std::string PauliString::label() const {
  static const char kChars[4] = {'I', 'X', 'Y', 'Z'};
  std::string s(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) s[static_cast<std::size_t>(q)] = kChars[digit_of(*this, q)];
  return s;
}

Complex PauliString::sign() const {
  int label_phase = std::popcount(x_ & z_);  // one factor of i per Y
  int rel = (phase2_ - label_phase) & 3;
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPhases[rel];
}

std::string PauliString::str() const {
  Complex s = sign();
  std::string prefix;
  if (s == Complex(1, 0)) prefix = "+";
  else if (s == Complex(-1, 0)) prefix = "-";
  else if (s == Complex(0, 1)) prefix = "+i";
  else prefix = "-i";
  return prefix + label();
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_) throw std::invalid_argument("PauliString: dimension mismatch");
  int anti = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return (anti & 1) == 0;
}

PauliString PauliString::adjoint() const {
  PauliString p = *this;
  p.phase2_ = (-phase2_ + 2 * std::popcount(x_ & z_)) & 3;
  return p;
}

Matrix PauliString::dense() const {
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Matrix m = Matrix::Identity(1, 1) * kPhases[phase2_];
  Matrix fx(2, 2), fz(2, 2), fxz(2, 2), fi(2, 2);
  fi << 1, 0, 0, 1;
  fx << 0, 1, 1, 0;
  fz << 1, 0, 0, -1;
  fxz << 0, -1, 1, 0;  // X*Z
  for (int q = 0; q < n_; ++q) {
    bool x = x_bit(q), z = z_bit(q);
    const Matrix& f = (x && z) ? fxz : (x ? fx : (z ? fz : fi));
    m = kron(m, f);
  }
  return m;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("pauli_mul: dimension mismatch");
  PauliString p;
  p.n_ = a.n_;
  p.x_ = a.x_ ^ b.x_;
  p.z_ = a.z_ ^ b.z_;
  p.phase2_ = (a.phase2_ + b.phase2_ + 2 * std::popcount(a.z_ & b.x_)) & 3;
  return p;
}

void fwht_pauli_inplace(Eigen::VectorXd& v) {
  const auto len = static_cast<std::size_t>(v.size());
  std::size_t check = len;
  while (check > 1) {
    if (check % 4 != 0) throw std::invalid_argument("fwht_pauli: length is not a power of 4");
    check /= 4;
  }
  for (std::size_t stride = 1; stride < len; stride *= 4) {
    for (std::size_t block = 0; block < len; block += 4 * stride) {
      for (std::size_t i = block; i < block + stride; ++i) {
        double a = v[static_cast<Eigen::Index>(i)];
        double b = v[static_cast<Eigen::Index>(i + stride)];
        double c = v[static_cast<Eigen::Index>(i + 2 * stride)];
        double d = v[static_cast<Eigen::Index>(i + 3 * stride)];
        v[static_cast<Eigen::Index>(i)] = a + b + c + d;
        v[static_cast<Eigen::Index>(i + stride)] = a + b - c - d;
        v[static_cast<Eigen::Index>(i + 2 * stride)] = a - b + c - d;
        v[static_cast<Eigen::Index>(i + 3 * stride)] = a - b - c + d;
      }
    }
  }
}

PauliEigenvalueVector walsh_hadamard(const PauliProbabilityVector& c) {
  PauliEigenvalueVector out;
  out.n = c.n;
  out.p = c.c;
  fwht_pauli_inplace(out.p);
  return out;
}

PauliProbabilityVector walsh_hadamard_inverse(const PauliEigenvalueVector& p) {
  PauliProbabilityVector out;
  out.n = p.n;
  out.c = p.p;
  fwht_pauli_inplace(out.c);
  out.c /= static_cast<double>(out.c.size());
  return out;
}

Ptm ptm_of_unitary(const Matrix& u) {
  const auto dim = u.rows();
  if (dim != u.cols() || dim < 2) throw std::invalid_argument("ptm_of_unitary: bad shape");
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) throw std::invalid_argument("ptm_of_unitary: not a qubit dimension");
  if ((u.adjoint() * u - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("ptm_of_unitary: input is not unitary");
  return ptm_of_kraus({u}, n);
}

Ptm ptm_of_kraus(const std::vector<Matrix>& kraus, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index nsq = Eigen::Index{1} << (2 * n);
  std::vector<Matrix> paulis;
  paulis.reserve(static_cast<std::size_t>(nsq));
  for (Eigen::Index j = 0; j < nsq; ++j)
    paulis.push_back(PauliString::from_index(n, static_cast<std::size_t>(j)).dense());

  Ptm out;
  out.n = n;
  out.m.resize(nsq, nsq);
  for (Eigen::Index j = 0; j < nsq; ++j) {
    Matrix image = Matrix::Zero(dim, dim);
    for (const Matrix& k : kraus) image += k * paulis[static_cast<std::size_t>(j)] * k.adjoint();
    for (Eigen::Index i = 0; i < nsq; ++i) {
      Complex tr = (paulis[static_cast<std::size_t>(i)].transpose().cwiseProduct(image)).sum();
      out.m(i, j) = tr.real() / static_cast<double>(dim);
    }
  }
  return out;
}

namespace {

// Signed Pauli from sparse factors, e.g. {{c,'X'},{t,'Z'}} with sign ±1.
PauliString sparse_pauli(int n, std::initializer_list<std::pair<int, char>> factors, int sgn) {
  std::string label(static_cast<std::size_t>(n), 'I');
  for (auto& [q, ch] : factors) label[static_cast<std::size_t>(q)] = ch;
  PauliString p = PauliString::from_label(label);
  return sgn < 0 ? p.times_phase(Complex(-1, 0)) : p;
}

}  // namespace

PauliString conjugate_through(const CliffordOp& op, const PauliString& p) {
  const int n = p.n();
  bool two = op.kind == CliffordKind::CX || op.kind == CliffordKind::CY || op.kind == CliffordKind::CZ;
  if (op.q0 < 0 || op.q0 >= n || (two && (op.q1 < 0 || op.q1 >= n || op.q1 == op.q0)))
    throw std::invalid_argument("conjugate_through: bad qubit indices");
  auto in_support = [&](int q) { return q == op.q0 || (two && q == op.q1); };

  auto image_x = [&](int q) -> PauliString {
    if (!in_support(q)) return sparse_pauli(n, {{q, 'X'}}, +1);
    switch (op.kind) {
      case CliffordKind::I: return sparse_pauli(n, {{q, 'X'}}, +1);
      case CliffordKind::X: return sparse_pauli(n, {{q, 'X'}}, +1);
      case CliffordKind::Y: return sparse_pauli(n, {{q, 'X'}}, -1);
      case CliffordKind::Z: return sparse_pauli(n, {{q, 'X'}}, -1);
      case CliffordKind::H: return sparse_pauli(n, {{q, 'Z'}}, +1);
      case CliffordKind::S: return sparse_pauli(n, {{q, 'Y'}}, +1);
      case CliffordKind::Sdg: return sparse_pauli(n, {{q, 'Y'}}, -1);
      case CliffordKind::CX:
        return q == op.q0 ? sparse_pauli(n, {{op.q0, 'X'}, {op.q1, 'X'}}, +1)
                          : sparse_pauli(n, {{op.q1, 'X'}}, +1);
      case CliffordKind::CY:
        return q == op.q0 ? sparse_pauli(n, {{op.q0, 'X'}, {op.q1, 'Y'}}, +1)
                          : sparse_pauli(n, {{op.q0, 'Z'}, {op.q1, 'X'}}, +1);
      case CliffordKind::CZ:
        return q == op.q0 ? sparse_pauli(n, {{op.q0, 'X'}, {op.q1, 'Z'}}, +1)
                          : sparse_pauli(n, {{op.q0, 'Z'}, {op.q1, 'X'}}, +1);
    }
    throw std::logic_error("unreachable");
  };
  auto image_z = [&](int q) -> PauliString {
    if (!in_support(q)) return sparse_pauli(n, {{q, 'Z'}}, +1);
    switch (op.kind) {
      case CliffordKind::I: return sparse_pauli(n, {{q, 'Z'}}, +1);
      case CliffordKind::X: return sparse_pauli(n, {{q, 'Z'}}, -1);
      case CliffordKind::Y: return sparse_pauli(n, {{q, 'Z'}}, -1);
      case CliffordKind::Z: return sparse_pauli(n, {{q, 'Z'}}, +1);
      case CliffordKind::H: return sparse_pauli(n, {{q, 'X'}}, +1);
      case CliffordKind::S: return sparse_pauli(n, {{q, 'Z'}}, +1);
      case CliffordKind::Sdg: return sparse_pauli(n, {{q, 'Z'}}, +1);
      case CliffordKind::CX:
        return q == op.q0 ? sparse_pauli(n, {{op.q0, 'Z'}}, +1)
                          : sparse_pauli(n, {{op.q0, 'Z'}, {op.q1, 'Z'}}, +1);
      case CliffordKind::CY:
        return q == op.q0 ? sparse_pauli(n, {{op.q0, 'Z'}}, +1)
                          : sparse_pauli(n, {{op.q0, 'Z'}, {op.q1, 'Z'}}, +1);
      case CliffordKind::CZ:
        return q == op.q0 ? sparse_pauli(n, {{op.q0, 'Z'}}, +1)
                          : sparse_pauli(n, {{op.q1, 'Z'}}, +1);
    }
    throw std::logic_error("unreachable");
  };

  // P = i^k * prod of generators (qubit-ascending, X before Z per qubit);
  // G P G† = i^k * prod of generator images. i^k is sign(P) * i^{#Y(P)}.
  PauliString acc = PauliString::identity(n);
  for (int q = 0; q < n; ++q) {
    if (p.x_bit(q)) acc = pauli_mul(acc, image_x(q));
    if (p.z_bit(q)) acc = pauli_mul(acc, image_z(q));
  }
  int y_count = std::popcount(p.x_bits() & p.z_bits());
  static const Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return acc.times_phase(p.sign() * kI[y_count & 3]);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix embed(const Matrix& op, const std::vector<int>& qubits, int n) {
  const int k = static_cast<int>(qubits.size());
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index sub = Eigen::Index{1} << k;
  if (op.rows() != sub || op.cols() != sub) throw std::invalid_argument("embed: operator shape mismatch");
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    Eigen::Index rsub = 0;
    for (int i = 0; i < k; ++i) rsub = (rsub << 1) | ((r >> (n - 1 - qubits[static_cast<std::size_t>(i)])) & 1);
    for (Eigen::Index csub = 0; csub < sub; ++csub) {
      Eigen::Index c = r;
      for (int i = 0; i < k; ++i) {
        Eigen::Index bit = (csub >> (k - 1 - i)) & 1;
        Eigen::Index pos = n - 1 - qubits[static_cast<std::size_t>(i)];
        c = (c & ~(Eigen::Index{1} << pos)) | (bit << pos);
      }
      out(r, c) = op(rsub, csub);
    }
  }
  return out;
}

}  // namespace rckit
