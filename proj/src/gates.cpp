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

#include "rckit/gates.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rckit/errors.hpp"

namespace rckit {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr Complex kJ(0.0, 1.0);
}  // namespace

std::string gate_name_str(GateName name) {
  switch (name) {
    case GateName::I: return "I";
    case GateName::X: return "X";
    case GateName::Y: return "Y";
    case GateName::Z: return "Z";
    case GateName::H: return "H";
    case GateName::S: return "S";
    case GateName::Sdg: return "Sdg";
    case GateName::T: return "T";
    case GateName::X45: return "X45";
    case GateName::Y45: return "Y45";
    case GateName::Z45: return "Z45";
    case GateName::U3: return "U3";
    case GateName::CX: return "CX";
    case GateName::CY: return "CY";
    case GateName::CZ: return "CZ";
  }
  throw std::logic_error("unreachable");
}

GateName gate_name_from_str(const std::string& s) {
  static const std::map<std::string, GateName> kNames = {
      {"I", GateName::I},     {"X", GateName::X},     {"Y", GateName::Y},
      {"Z", GateName::Z},     {"H", GateName::H},     {"S", GateName::S},
      {"Sdg", GateName::Sdg}, {"T", GateName::T},     {"X45", GateName::X45},
      {"Y45", GateName::Y45}, {"Z45", GateName::Z45}, {"U3", GateName::U3},
      {"CX", GateName::CX},   {"CY", GateName::CY},   {"CZ", GateName::CZ}};
  auto it = kNames.find(s);
  if (it == kNames.end()) throw ValidationError("unknown gate name: " + s);
  return it->second;
}

bool is_two_qubit(GateName name) {
  return name == GateName::CX || name == GateName::CY || name == GateName::CZ;
}

bool is_clifford(GateName name) { return clifford_kind_of(name).has_value(); }

std::optional<CliffordKind> clifford_kind_of(GateName name) {
  switch (name) {
    case GateName::I: return CliffordKind::I;
    case GateName::X: return CliffordKind::X;
    case GateName::Y: return CliffordKind::Y;
    case GateName::Z: return CliffordKind::Z;
    case GateName::H: return CliffordKind::H;
    case GateName::S: return CliffordKind::S;
    case GateName::Sdg: return CliffordKind::Sdg;
    case GateName::CX: return CliffordKind::CX;
    case GateName::CY: return CliffordKind::CY;
    case GateName::CZ: return CliffordKind::CZ;
    default: return std::nullopt;
  }
}

Gate Gate::single(GateName name, int q) {
  if (is_two_qubit(name) || name == GateName::U3)
    throw ValidationError("Gate::single: wrong constructor for " + gate_name_str(name));
  Gate g;
  g.name = name;
  g.qubits = {q};
  return g;
}

Gate Gate::u3(int q, double theta, double phi, double lambda) {
  Gate g;
  g.name = GateName::U3;
  g.qubits = {q};
  g.params = {theta, phi, lambda};
  return g;
}

Gate Gate::two(GateName name, int control, int target) {
  if (!is_two_qubit(name)) throw ValidationError("Gate::two: not a two-qubit gate");
  if (control == target) throw ValidationError("Gate::two: control equals target");
  Gate g;
  g.name = name;
  g.qubits = {control, target};
  return g;
}

Matrix rx_matrix(double theta) {
  Matrix m(2, 2);
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, -kJ * s, -kJ * s, c;
  return m;
}

Matrix ry_matrix(double theta) {
  Matrix m(2, 2);
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, -s, s, c;
  return m;
}

Matrix rz_matrix(double theta) {
  Matrix m(2, 2);
  m << std::exp(-kJ * (theta / 2)), 0, 0, std::exp(kJ * (theta / 2));
  return m;
}

Matrix u3_matrix(double theta, double phi, double lambda) {
  Matrix m(2, 2);
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, -std::exp(kJ * lambda) * s, std::exp(kJ * phi) * s, std::exp(kJ * (phi + lambda)) * c;
  return m;
}

Matrix gate_matrix(const Gate& g) {
  if (is_two_qubit(g.name)) {
    if (g.qubits.size() != 2 || g.qubits[0] == g.qubits[1])
      throw ValidationError("gate_matrix: two-qubit gate needs two distinct qubits");
  } else if (g.qubits.size() != 1) {
    throw ValidationError("gate_matrix: single-qubit gate needs exactly one qubit");
  }
  Matrix m;
  switch (g.name) {
    case GateName::I: return Matrix::Identity(2, 2);
    case GateName::X: return PauliString::from_label("X").dense();
    case GateName::Y: return PauliString::from_label("Y").dense();
    case GateName::Z: return PauliString::from_label("Z").dense();
    case GateName::H: {
      m.resize(2, 2);
      double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      return m;
    }
    case GateName::S: {
      m.resize(2, 2);
      m << 1, 0, 0, kJ;
      return m;
    }
    case GateName::Sdg: {
      m.resize(2, 2);
      m << 1, 0, 0, -kJ;
      return m;
    }
    case GateName::T: {
      m.resize(2, 2);
      m << 1, 0, 0, std::exp(kJ * (kPi / 4));
      return m;
    }
    case GateName::X45: return rx_matrix(kPi / 4);
    case GateName::Y45: return ry_matrix(kPi / 4);
    case GateName::Z45: return rz_matrix(kPi / 4);
    case GateName::U3:
      if (g.params.size() != 3) throw ValidationError("gate_matrix: U3 needs three params");
      return u3_matrix(g.params[0], g.params[1], g.params[2]);
    case GateName::CX: {
      m = Matrix::Zero(4, 4);
      m(0, 0) = 1; m(1, 1) = 1; m(2, 3) = 1; m(3, 2) = 1;
      return m;
    }
    case GateName::CY: {
      m = Matrix::Zero(4, 4);
      m(0, 0) = 1; m(1, 1) = 1; m(2, 3) = -kJ; m(3, 2) = kJ;
      return m;
    }
    case GateName::CZ: {
      m = Matrix::Identity(4, 4);
      m(3, 3) = -1;
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

std::array<double, 3> zyz_angles(const Matrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw ValidationError("zyz_angles: expected 2x2");
  double a = std::abs(u(0, 0)), b = std::abs(u(1, 0));
  double theta = 2.0 * std::atan2(b, a);
  double phi = 0.0, lambda = 0.0;
  if (a > 1e-12 && b > 1e-12) {
    double gamma = -std::arg(u(0, 0));
    phi = std::arg(u(1, 0) * std::exp(kJ * gamma));
    lambda = std::arg(-u(0, 1) * std::exp(kJ * gamma));
  } else if (a > 1e-12) {
    // diagonal: absorb everything into phi
    phi = std::arg(u(1, 1) / u(0, 0));
  } else {
    // anti-diagonal (theta = pi)
    lambda = std::arg(-u(0, 1) / u(1, 0));
  }
  return {theta, phi, lambda};
}

Gate fold_to_gate(int q, const Matrix& u) {
  if ((u.adjoint() * u - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() > 1e-9)
    throw ValidationError("fold_to_gate: input is not unitary");
  static const GateName kNamed[] = {GateName::I, GateName::X, GateName::Y, GateName::Z,
                                    GateName::H, GateName::S, GateName::Sdg, GateName::T};
  for (GateName name : kNamed) {
    Matrix ref = gate_matrix(Gate::single(name, 0));
    // compare up to global phase, anchored on the largest entry of ref
    Eigen::Index bi = 0, bj = 0;
    ref.cwiseAbs().maxCoeff(&bi, &bj);
    if (std::abs(u(bi, bj)) < 1e-12) continue;
    Complex phase = u(bi, bj) / ref(bi, bj);
    if (std::abs(std::abs(phase) - 1.0) > 1e-12) continue;
    if ((u - phase * ref).cwiseAbs().maxCoeff() < 1e-12) return Gate::single(name, q);
  }
  auto [theta, phi, lambda] = zyz_angles(u);
  return Gate::u3(q, theta, phi, lambda);
}

const std::vector<Matrix>& c1_table() {
  static const std::vector<Matrix> kTable = [] {
    auto normalize_phase = [](Matrix m) {
      for (Eigen::Index i = 0; i < 4; ++i) {
        Complex v = m(i / 2, i % 2);
        if (std::abs(v) > 1e-9) {
          m *= std::conj(v) / std::abs(v);
          break;
        }
      }
      return m;
    };
    auto close = [](const Matrix& a, const Matrix& b) {
      return (a - b).cwiseAbs().maxCoeff() < 1e-9;
    };

    std::vector<Matrix> elems;
    elems.push_back(Matrix::Identity(2, 2));
    Matrix h(2, 2), s(2, 2);
    h << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
    s << 1, 0, 0, kJ;
    // closure of <H, S> up to global phase
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const Matrix* g : {&h, &s}) {
        Matrix cand = normalize_phase(*g * elems[i]);
        bool known = std::any_of(elems.begin(), elems.end(),
                                 [&](const Matrix& e) { return close(e, cand); });
        if (!known) elems.push_back(cand);
      }
    }
    if (elems.size() != 24) throw std::logic_error("c1_table: closure size != 24");

    // canonical order: sort by the conjugation images of X and Z
    auto image_key = [&](const Matrix& u, const Matrix& p) {
      Matrix img = u * p * u.adjoint();
      for (int d = 1; d <= 3; ++d) {
        Matrix pd = PauliString::from_index(1, static_cast<std::size_t>(d)).dense();
        if (close(img, pd)) return 2 * d;
        if (close(img, Matrix(-pd))) return 2 * d + 1;
      }
      throw std::logic_error("c1_table: non-Clifford element");
    };
    std::sort(elems.begin(), elems.end(), [&](const Matrix& u, const Matrix& v) {
      Matrix x = PauliString::from_label("X").dense();
      Matrix z = PauliString::from_label("Z").dense();
      auto ku = std::make_pair(image_key(u, x), image_key(u, z));
      auto kv = std::make_pair(image_key(v, x), image_key(v, z));
      return ku < kv;
    });
    return elems;
  }();
  return kTable;
}

}  // namespace rckit
