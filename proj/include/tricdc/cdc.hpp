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

// Controlled dense coding on a shared three-qubit state.
//
// The controller measures its qubit in a rotated basis and announces the
// outcome; the remaining two qubits, ordered (sender, receiver) by index,
// are then used for ordinary dense coding. The sender encodes a uniformly
// random two-bit message with {I, X, Z, ZX} and the receiver decodes with a
// Bell measurement. All quantities are exact functions of the amplitudes.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "tricdc/entanglement.hpp"
#include "tricdc/states.hpp"

namespace tricdc {

/// Probability below which a measurement branch is unreachable.
inline constexpr double kBranchFloor = 1e-12;

/// Measurement basis {cos t|0> + e^{ip} sin t|1>, e^{-ip} sin t|0> - cos t|1>}
/// with t in [0, pi/2] and p in [0, 2pi). t = 0 is the computational basis.
struct ControllerBasis {
  double theta = 0;
  double phi = 0;

  /// Validating factory; throws ParameterError outside the ranges above.
  static ControllerBasis make(double theta, double phi);

  /// Basis vector for outcome 0 or 1.
  Ket2 vector(int outcome) const;
};

struct MeasurementBranch {
  int outcome = 0;
  double probability = 0;
  /// Normalized sender/receiver state; empty when probability < 1e-12.
  std::optional<Ket4> post_state;
  /// Set by apply_correction when there was no post state to correct.
  bool correction_skipped = false;
};

/// Pauli (real-Y convention) applied to the receiver for each outcome;
/// outcomes without an entry get the identity.
struct CorrectionRule {
  std::map<int, Pauli> by_outcome;

  Pauli for_outcome(int outcome) const;
};

struct BranchReport {
  MeasurementBranch branch;  // after correction
  bool reachable = false;
  BellState best_bell = BellState::PhiPlus;
  double best_bell_fidelity = 0;
  double capacity_bits = 0;
};

struct CdcReport {
  int controller = kQubitA;
  ControllerBasis basis;
  std::vector<BranchReport> branches;
  double average_capacity_bits = 0;
  double min_capacity_bits = 0;
  bool perfect_cdc = false;
};

struct BasisSearchResult {
  ControllerBasis basis;
  double min_branch_concurrence = 0;
};

struct CdcVerdict {
  bool usable = false;
  EntanglementProfile profile;
  BasisSearchResult search;
  CdcReport report;
};

/// The two non-controller qubits in ascending order (sender, receiver).
std::array<int, 2> remaining_qubits(int controller);

std::vector<MeasurementBranch> controller_measure(const PureState3& state, int controller,
                                                  const ControllerBasis& basis);

MeasurementBranch apply_correction(MeasurementBranch branch, const CorrectionRule& rule);

/// Outcome probabilities over (phi+, phi-, psi+, psi-).
std::array<double, 4> bell_measure(const Ket4& state);

/// Mutual information in bits between a uniform two-bit message and the
/// Bell-measurement outcome.
double dense_coding_capacity(const Ket4& shared);

CdcReport run_cdc(const PureState3& state, int controller, const ControllerBasis& basis,
                  const CorrectionRule& rule);

/// Exhaustive scan of theta = i pi/(2 grid), i = 0..grid and
/// phi = 2 pi j / grid, j = 0..grid-1, maximizing the smallest post-state
/// concurrence over reachable branches. Ties go to the smallest theta, then
/// the smallest phi. Doubling `grid` refines the lattice, so the optimum
/// never decreases under doubling. Requires grid >= 8.
BasisSearchResult optimize_controller_basis(const PureState3& state, int controller,
                                            int grid = 64);

/// Verdict from the SLOCC class, plus the best protocol run found by the
/// basis search with controller a, for side-by-side comparison.
CdcVerdict cdc_usable(const PureState3& state, int grid = 64);

}  // namespace tricdc
