// Copyright 2026 The tricdc Authors
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

#include "tricdc/states.hpp"

#include <cmath>
#include <numbers>

namespace tricdc {

namespace {

using std::numbers::pi;

// Slack for closed interval endpoints so that pi/2 written as a decimal
// literal still lands inside [0, pi/2].
constexpr double kBoundarySlack = 1e-12;

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw ParameterError(std::string(name) + " must be finite");
  }
}

void require_closed(double value, double lo, double hi, const char* name) {
  require_finite(value, name);
  if (value < lo - kBoundarySlack || value > hi + kBoundarySlack) {
    throw ParameterError(std::string(name) + " = " + std::to_string(value) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// (lo, hi]
void require_left_open(double value, double lo, double hi, const char* name) {
  require_finite(value, name);
  if (value <= lo || value > hi + kBoundarySlack) {
    throw ParameterError(std::string(name) + " = " + std::to_string(value) + " outside (" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// [lo, hi)
void require_right_open(double value, double lo, double hi, const char* name) {
  require_finite(value, name);
  if (value < lo - kBoundarySlack || value >= hi) {
    throw ParameterError(std::string(name) + " = " + std::to_string(value) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
}

void require_positive(double value, const char* name) {
  require_finite(value, name);
  if (!(value > 0)) {
    throw ParameterError(std::string(name) + " must be > 0, got " + std::to_string(value));
  }
}

Ket8 seeded_family(const Ket4& seed, Axis k, double epsilon) {
  require_closed(epsilon, 0.0, pi / 2, "epsilon");
  const Ket4 flipped = kron(Matrixd::Identity(2, 2), pauli(to_pauli(k))) * seed;
  Ket8 out;
  out.head<4>() = std::sin(epsilon) * seed;
  out.tail<4>() = std::cos(epsilon) * flipped;
  return out;
}

}  // namespace

PureState3 PureState3::from_amplitudes(const Ket8& amplitudes) {
  if (!amplitudes.allFinite()) {
    throw ContractViolation("PureState3: amplitudes must be finite");
  }
  const double norm2 = amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw ContractViolation("PureState3: squared norm " + std::to_string(norm2) + " is not 1");
  }
  return PureState3(amplitudes);
}

PureState3 PureState3::normalized(const Ket8& amplitudes) {
  if (!amplitudes.allFinite()) {
    throw ContractViolation("PureState3: amplitudes must be finite");
  }
  const double norm = amplitudes.norm();
  if (!(norm > 1e-12)) {
    throw ContractViolation("PureState3: cannot normalize a zero vector");
  }
  return PureState3(amplitudes / norm);
}

Matrixd PureState3::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

PureState3 PureState3::transformed(const Matrixd& unitary) const {
  if (unitary.rows() != 8 || unitary.cols() != 8) {
    throw InvalidDimension("PureState3::transformed: unitary must be 8x8");
  }
  return from_amplitudes(unitary * amplitudes_);
}

Ket4 bell_ket(BellState which) {
  const double h = 1.0 / std::sqrt(2.0);
  Ket4 v = Ket4::Zero();
  switch (which) {
    case BellState::PhiPlus: v(0) = h; v(3) = h; break;
    case BellState::PhiMinus: v(0) = h; v(3) = -h; break;
    case BellState::PsiPlus: v(1) = h; v(2) = h; break;
    case BellState::PsiMinus: v(1) = h; v(2) = -h; break;
  }
  return v;
}

std::string_view to_string(BellState which) {
  switch (which) {
    case BellState::PhiPlus: return "phi+";
    case BellState::PhiMinus: return "phi-";
    case BellState::PsiPlus: return "psi+";
    case BellState::PsiMinus: return "psi-";
  }
  return "?";
}

Pauli to_pauli(Axis axis) {
  switch (axis) {
    case Axis::X: return Pauli::X;
    case Axis::Y: return Pauli::Y;
    case Axis::Z: return Pauli::Z;
  }
  return Pauli::I;
}

PureState3 make_chi(Sign sign, Axis k, double epsilon) {
  const Ket4 seed = bell_ket(sign == Sign::Plus ? BellState::PhiPlus : BellState::PhiMinus);
  return PureState3::normalized(seeded_family(seed, k, epsilon));
}

PureState3 make_xi(Sign sign, Axis k, double epsilon) {
  const Ket4 seed = bell_ket(sign == Sign::Plus ? BellState::PsiPlus : BellState::PsiMinus);
  return PureState3::normalized(seeded_family(seed, k, epsilon));
}

PureState3 make_ghz() {
  Ket8 v = Ket8::Zero();
  v(0) = v(7) = 1.0 / std::sqrt(2.0);
  return PureState3::normalized(v);
}

PureState3 make_w() {
  Ket8 v = Ket8::Zero();
  v(1) = v(2) = v(4) = 1.0 / std::sqrt(3.0);
  return PureState3::normalized(v);
}

PureState3 make_ghz_class(double delta, double alpha, double beta, double gamma, double phi) {
  require_left_open(delta, 0.0, pi / 4, "delta");
  require_left_open(alpha, 0.0, pi / 2, "alpha");
  require_left_open(beta, 0.0, pi / 2, "beta");
  require_left_open(gamma, 0.0, pi / 2, "gamma");
  require_right_open(phi, 0.0, 2 * pi, "phi");

  const double k = 1.0 / (1.0 + 2.0 * std::cos(delta) * std::sin(delta) * std::cos(alpha) *
                                    std::cos(beta) * std::cos(gamma) * std::cos(phi));
  Ket2 va, vb, vc;
  va << std::cos(alpha), std::sin(alpha);
  vb << std::cos(beta), std::sin(beta);
  vc << std::cos(gamma), std::sin(gamma);
  Ket8 product = kron_ket(kron_ket(va, vb), vc);

  Ket8 v = std::sin(delta) * std::polar(1.0, phi) * product;
  v(0) += std::cos(delta);
  v *= std::sqrt(k);
  return PureState3::normalized(v);
}

PureState3 make_w_class(double a, double b, double c) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(c, "c");
  double d = 1.0 - (a + b + c);
  if (d < -kBoundarySlack) {
    throw ParameterError("w_class: a + b + c must not exceed 1");
  }
  d = std::max(d, 0.0);
  Ket8 v = Ket8::Zero();
  v(0) = std::sqrt(d);
  v(1) = std::sqrt(a);
  v(2) = std::sqrt(b);
  v(4) = std::sqrt(c);
  return PureState3::normalized(v);
}

PureState3 make_ms(double alpha) {
  require_closed(alpha, 0.0, pi, "alpha");
  const double h = 1.0 / std::sqrt(2.0);
  Ket8 v = Ket8::Zero();
  v(0) = h;
  v(6) = h * std::cos(alpha);
  v(7) = h * std::sin(alpha);
  return PureState3::normalized(v);
}

PureState3 make_symmetric(double p, double q, double r, double s) {
  for (auto [value, name] : {std::pair{p, "p"}, {q, "q"}, {r, "r"}, {s, "s"}}) {
    require_finite(value, name);
  }
  if (!(p >= q && q >= r && r >= s && s >= 0)) {
    throw ParameterError("symmetric: require p >= q >= r >= s >= 0");
  }
  if (std::abs(p * p + q * q + r * r + s * s - 1.0) > 1e-10) {
    throw ParameterError("symmetric: p^2 + q^2 + r^2 + s^2 must equal 1");
  }
  Ket8 v = Ket8::Zero();
  v(0) = p;
  v(7) = q;
  v(1) = r;
  v(6) = s;
  return PureState3::normalized(v);
}

PureState3 make_type1(double l) {
  require_positive(l, "l");
  const double norm = 1.0 / std::sqrt(1.0 + l * l);
  Ket8 v = Ket8::Zero();
  v(0) = norm;
  v(7) = norm * l;
  return PureState3::normalized(v);
}

PureState3 make_type2(double n, double alpha, double epsilon) {
  require_positive(n, "n");
  require_finite(alpha, "alpha");
  require_finite(epsilon, "epsilon");
  const double scale = 1.0 / std::sqrt(2.0 * (n + 1.0));
  Ket8 v = Ket8::Zero();
  v(4) = scale;                                          // |100>
  v(2) = scale * std::sqrt(n) * std::polar(1.0, alpha);  // |010>
  v(1) = std::polar(1.0, epsilon) / std::sqrt(2.0);      // |001>
  return PureState3::normalized(v);
}

Matrixd build_u_ab(double n, double alpha, double epsilon) {
  require_positive(n, "n");
  require_finite(alpha, "alpha");
  require_finite(epsilon, "epsilon");
  const double scale = 1.0 / std::sqrt(n + 1.0);
  const Complexd root_n_phase = std::sqrt(n) * std::polar(1.0, alpha);

  Matrixd u = Matrixd::Zero(4, 4);
  // column |00> -> (|10> + sqrt(n) e^{i alpha}|01>)/sqrt(n+1)
  u(2, 0) = scale;
  u(1, 0) = scale * root_n_phase;
  // column |01> -> |11>
  u(3, 1) = 1.0;
  // column |10> -> (sqrt(n) e^{-i alpha}|10> - |01>)/sqrt(n+1)
  u(2, 2) = scale * std::conj(root_n_phase);
  u(1, 2) = -scale;
  // column |11> -> e^{i eps}|00>
  u(0, 3) = std::polar(1.0, epsilon);
  return u;
}

}  // namespace tricdc
