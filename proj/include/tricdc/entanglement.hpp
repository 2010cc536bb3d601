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
#include <optional>
#include <string>

#include "tricdc/qmath.hpp"
#include "tricdc/states.hpp"

namespace tricdc {

/// Qubit labels a, b, c as indices 0, 1, 2.
inline constexpr int kQubitA = 0;
inline constexpr int kQubitB = 1;
inline constexpr int kQubitC = 2;

char qubit_name(int qubit);

/// SLOCC class of a three-qubit pure state.
struct SloccClass {
  enum class Kind { Product, Biseparable, WClass, GhzClass };
  Kind kind = Kind::Product;
  /// For Biseparable: the qubit that factors off (a|bc, b|ca, c|ab).
  std::optional<int> split;

  friend bool operator==(const SloccClass&, const SloccClass&) = default;

  static SloccClass product() { return {Kind::Product, std::nullopt}; }
  static SloccClass biseparable(int qubit) { return {Kind::Biseparable, qubit}; }
  static SloccClass w_class() { return {Kind::WClass, std::nullopt}; }
  static SloccClass ghz_class() { return {Kind::GhzClass, std::nullopt}; }
};

/// "Product", "Biseparable(a|bc)", "Biseparable(b|ca)", "Biseparable(c|ab)",
/// "WClass" or "GhzClass".
std::string to_string(const SloccClass& cls);

/// Inverse of to_string; nullopt for an unknown label.
std::optional<SloccClass> slocc_class_from_string(const std::string& label);

struct EntanglementProfile {
  int rank_a = 0;
  int rank_b = 0;
  int rank_c = 0;
  double c2_a_bc = 0;  // 4 det(rho_a)
  double c2_ab = 0;
  double c2_ac = 0;
  double tau = 0;      // hyperdeterminant route
  double tau_ckw = 0;  // c2_a_bc - c2_ab - c2_ac, clamped at zero
  SloccClass slocc_class;
};

namespace defaults {
inline constexpr double kRankTol = 1e-9;
inline constexpr double kTangleTol = 1e-8;
/// Largest |tau - tau_ckw| profile() tolerates.
inline constexpr double kRouteMismatch = 1e-6;
}  // namespace defaults

/// Single-qubit reduction of `qubit`.
DensityMatrixd reduce_one(const PureState3& state, int qubit);

/// Two-qubit reduction over {first, second}, first < second.
DensityMatrixd reduce_two(const PureState3& state, int first, int second);

/// 2|a00 a11 - a01 a10| for a normalized two-qubit ket.
double concurrence_pure2(const Ket4& state);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4) of a two-qubit density
/// matrix, l_i the descending square roots of the spectrum of
/// sqrt(rho) rho~ sqrt(rho), rho~ = (Y (x) Y) rho* (Y (x) Y) with the
/// Hermitian Y.
double concurrence_mixed2(const DensityMatrixd& rho);

/// C^2 between `pivot` and the other two qubits: 4 det(rho_pivot).
double c2_one_vs_rest(const PureState3& state, int pivot);

/// 3-tangle from the amplitude polynomial 4|d1 - 2 d2 + 4 d3|.
double tangle_hyperdet(const PureState3& state);

/// 3-tangle as the monogamy residual C^2_{p(qr)} - C^2_{pq} - C^2_{pr}.
double tangle_ckw(const PureState3& state, int pivot);

std::array<int, 3> rank_profile(const PureState3& state, double tol = defaults::kRankTol);

SloccClass classify(const PureState3& state, double rank_tol = defaults::kRankTol,
                    double tangle_tol = defaults::kTangleTol);

/// All measures at default tolerances. Throws NumericConsistencyError when
/// the two tangle routes differ by more than 1e-6.
EntanglementProfile profile(const PureState3& state);

}  // namespace tricdc
