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

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "tricdc/qmath.hpp"

namespace tricdc {

/// Normalized three-qubit pure state; amplitude of |abc> at 4a + 2b + c.
class PureState3 {
 public:
  /// Tolerance on |norm^2 - 1| accepted by from_amplitudes.
  static constexpr double kNormTolerance = 1e-12;

  /// Wraps amplitudes that are already unit norm. Throws ContractViolation
  /// otherwise, or if any amplitude is not finite.
  static PureState3 from_amplitudes(const Ket8& amplitudes);

  /// Rescales to unit norm. Throws ContractViolation for a zero vector.
  static PureState3 normalized(const Ket8& amplitudes);

  const Ket8& amplitudes() const { return amplitudes_; }
  Complexd operator[](int index) const { return amplitudes_(index); }
  Complexd amplitude(int a, int b, int c) const { return amplitudes_(4 * a + 2 * b + c); }

  /// |psi><psi| as an 8x8 matrix.
  Matrixd projector() const;

  /// Applies a unitary acting on all three qubits.
  PureState3 transformed(const Matrixd& unitary) const;

 private:
  explicit PureState3(const Ket8& amplitudes) : amplitudes_(amplitudes) {}
  Ket8 amplitudes_;
};

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellState, 4> kBellStates = {
    BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus};

Ket4 bell_ket(BellState which);
std::string_view to_string(BellState which);

enum class Sign { Plus, Minus };

/// Axis selecting sigma_x, sigma_y (real form) or sigma_z on qubit c.
enum class Axis { X, Y, Z };

Pauli to_pauli(Axis axis);

// Families built on a Bell-state seed on bc:
//   sin(eps) |0>_a |seed>_bc + cos(eps) |1>_a sigma_k,c |seed>_bc
// chi uses phi^sign as seed, xi uses psi^sign. eps in [0, pi/2].
PureState3 make_chi(Sign sign, Axis k, double epsilon);
PureState3 make_xi(Sign sign, Axis k, double epsilon);

/// (|000> + |111>)/sqrt2
PureState3 make_ghz();
/// (|001> + |010> + |100>)/sqrt3
PureState3 make_w();

/// sqrt(K) (cos d |000> + sin d e^{i phi} |v_a v_b v_c>) with
/// |v_x> = cos x |0> + sin x |1>. delta in (0, pi/4], alpha, beta, gamma in
/// (0, pi/2], phi in [0, 2pi).
PureState3 make_ghz_class(double delta, double alpha, double beta, double gamma, double phi);

/// sqrt(a)|001> + sqrt(b)|010> + sqrt(c)|100> + sqrt(d)|000>, d = 1 - a - b - c.
PureState3 make_w_class(double a, double b, double c);

/// Maximal slice state (|000> + cos a |110> + sin a |111>)/sqrt2, a in [0, pi].
PureState3 make_ms(double alpha);

/// p|000> + q|111> + r|001> + s|110>, p >= q >= r >= s >= 0, unit norm within 1e-10.
PureState3 make_symmetric(double p, double q, double r, double s);

/// (|000> + l|111>)/sqrt(1 + l^2), l > 0.
PureState3 make_type1(double l);

/// (|v>_ab |0>_c + e^{i eps} |00>_ab |1>_c)/sqrt2 with
/// |v> = (|10> + sqrt(n) e^{i alpha} |01>)/sqrt(n + 1), n > 0.
PureState3 make_type2(double n, double alpha, double epsilon);

/// Two-qubit unitary on ab that maps the standard GHZ state to make_type2:
/// |00> -> |v>, |01> -> |11>, |10> -> |v_perp>, |11> -> e^{i eps}|00>.
Matrixd build_u_ab(double n, double alpha, double epsilon);

}  // namespace tricdc
