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

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rckit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Signed n-qubit Pauli operator.
///
/// Internally the operator value is i^phase2 * ⊗_q X^{x_q} Z^{z_q}, with
/// qubit 0 the most significant tensor factor. The canonical label string
/// ("XIZY", ...) carries an implicit factor of i per Y, so the sign exposed
/// to callers is relative to the ⊗{I,X,Y,Z} label.
class PauliString {
 public:
  PauliString() = default;
  static PauliString identity(int n);
  // Builds +P from a label such as "XIZY" (qubit 0 first).
  static PauliString from_label(const std::string& label);
  // Builds +P from its index in the I<X<Y<Z lexicographic order, qubit 0
  // most significant.
  static PauliString from_index(int n, std::size_t index);
  static PauliString sample_uniform(int n, std::mt19937_64& rng);

  // phase * identity, with phase one of +1, -1, +i, -i.
  static PauliString scalar(int n, Complex phase);

  int n() const { return n_; }
  bool x_bit(int q) const { return (x_ >> q) & 1u; }
  bool z_bit(int q) const { return (z_ >> q) & 1u; }
  uint64_t x_bits() const { return x_; }
  uint64_t z_bits() const { return z_; }

  PauliString times_phase(Complex phase) const;

  bool is_identity_label() const { return x_ == 0 && z_ == 0; }
  int weight() const;  // number of non-identity tensor factors

  std::size_t index() const;
  std::string label() const;
  // Sign relative to the canonical label: one of +1, -1, +i, -i.
  Complex sign() const;
  std::string str() const;  // e.g. "-iXZ"

  bool commutes_with(const PauliString& other) const;

  PauliString adjoint() const;
  Matrix dense() const;

  friend PauliString pauli_mul(const PauliString& a, const PauliString& b);
  bool operator==(const PauliString& other) const = default;

 private:
  int n_ = 0;
  uint64_t x_ = 0;
  uint64_t z_ = 0;
  int phase2_ = 0;  // exponent of i in the value convention
};

// Signed product a*b. Throws std::invalid_argument on dimension mismatch.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

/// Real 4^n x 4^n matrix of a channel in the normalized Pauli basis
/// P/sqrt(2^n), rows and columns ordered like PauliString::from_index.
struct Ptm {
  int n = 0;
  Eigen::MatrixXd m;
};

/// Vector of Pauli error probabilities c_P, indexed like PauliString.
struct PauliProbabilityVector {
  int n = 0;
  Eigen::VectorXd c;
};

/// Vector of Pauli-basis eigenvalues p_P (PTM diagonal), same indexing.
struct PauliEigenvalueVector {
  int n = 0;
  Eigen::VectorXd p;
};

// p_Q = sum_P c_P (-1)^{<P,Q>} where <P,Q> is the commutation indicator.
PauliEigenvalueVector walsh_hadamard(const PauliProbabilityVector& c);
// Inverse transform; forward then inverse is the identity.
PauliProbabilityVector walsh_hadamard_inverse(const PauliEigenvalueVector& p);
// In-place transform on a raw length-4^n vector (shared by both directions;
// the inverse divides by 4^n afterwards).
void fwht_pauli_inplace(Eigen::VectorXd& v);

// PTM_{Q,P} = Tr[Q u P u†] / 2^n. Throws if u is not unitary to 1e-10.
Ptm ptm_of_unitary(const Matrix& u);
// PTM of a channel given by a Kraus set.
Ptm ptm_of_kraus(const std::vector<Matrix>& kraus, int n);

// Elementary Clifford conjugations, used gate-by-gate to push a Pauli
// through a Clifford cycle. CX/CY/CZ use (control, target) qubit order.
enum class CliffordKind { I, X, Y, Z, H, S, Sdg, CX, CY, CZ };

struct CliffordOp {
  CliffordKind kind;
  int q0 = 0;
  int q1 = 0;  // target qubit for two-qubit kinds
};

// Returns the signed Pauli G P G†.
PauliString conjugate_through(const CliffordOp& op, const PauliString& p);

// Dense n-qubit matrix helpers (qubit 0 most significant).
Matrix kron(const Matrix& a, const Matrix& b);
// Embeds op acting on `qubits` (in the op's own qubit order) into n qubits.
Matrix embed(const Matrix& op, const std::vector<int>& qubits, int n);

}  // namespace rckit
