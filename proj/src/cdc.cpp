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

#include "tricdc/cdc.hpp"

#include <cmath>
#include <numbers>

namespace tricdc {

namespace {

using std::numbers::pi;

constexpr double kPerfectSlack = 1e-9;
constexpr double kTieSlack = 1e-12;

void require_controller(int controller) {
  if (controller < 0 || controller > 2) {
    throw ContractViolation("controller must be qubit 0, 1 or 2, got " + std::to_string(controller));
  }
}

int bit_weight(int qubit) { return 4 >> qubit; }

double entropy_bits(const std::array<double, 4>& p) {
  double h = 0;
  for (double x : p) {
    if (x > 0) h -= x * std::log2(x);
  }
  return h;
}

// Sender encodings I, X, Z, ZX on the first qubit.
const std::array<Matrixd, 4>& encodings() {
  static const std::array<Matrixd, 4> ops = [] {
    const Matrixd id = pauli(Pauli::I);
    return std::array<Matrixd, 4>{
        kron(pauli(Pauli::I), id), kron(pauli(Pauli::X), id), kron(pauli(Pauli::Z), id),
        kron(Matrixd(pauli(Pauli::Z) * pauli(Pauli::X)), id)};
  }();
  return ops;
}

}  // namespace

ControllerBasis ControllerBasis::make(double theta, double phi) {
  if (!std::isfinite(theta) || theta < -1e-12 || theta > pi / 2 + 1e-12) {
    throw ParameterError("controller basis theta must lie in [0, pi/2]");
  }
  if (!std::isfinite(phi) || phi < -1e-12 || phi >= 2 * pi) {
    throw ParameterError("controller basis phi must lie in [0, 2pi)");
  }
  return {std::clamp(theta, 0.0, pi / 2), std::max(phi, 0.0)};
}

Ket2 ControllerBasis::vector(int outcome) const {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Ket2 v;
  if (outcome == 0) {
    v << c, std::polar(s, phi);
  } else if (outcome == 1) {
    v << std::polar(s, -phi), -c;
  } else {
    throw ContractViolation("controller outcome must be 0 or 1");
  }
  return v;
}

Pauli CorrectionRule::for_outcome(int outcome) const {
  const auto it = by_outcome.find(outcome);
  return it == by_outcome.end() ? Pauli::I : it->second;
}

std::array<int, 2> remaining_qubits(int controller) {
  require_controller(controller);
  std::array<int, 2> out{};
  int n = 0;
  for (int q = 0; q < 3; ++q) {
    if (q != controller) out[static_cast<std::size_t>(n++)] = q;
  }
  return out;
}

std::vector<MeasurementBranch> controller_measure(const PureState3& state, int controller,
                                                  const ControllerBasis& basis) {
  const auto [sender, receiver] = remaining_qubits(controller);
  std::vector<MeasurementBranch> branches;
  for (int outcome = 0; outcome < 2; ++outcome) {
    const Ket2 b = basis.vector(outcome);
    Ket4 post = Ket4::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int x = 0; x < 2; ++x) {
          const int index = x * bit_weight(controller) + i * bit_weight(sender) + j * bit_weight(receiver);
          post(2 * i + j) += std::conj(b(x)) * state[index];
        }
      }
    }
    MeasurementBranch branch;
    branch.outcome = outcome;
    branch.probability = post.squaredNorm();
    if (branch.probability >= kBranchFloor) {
      branch.post_state = post / std::sqrt(branch.probability);
    }
    branches.push_back(branch);
  }
  return branches;
}

MeasurementBranch apply_correction(MeasurementBranch branch, const CorrectionRule& rule) {
  if (!branch.post_state) {
    branch.correction_skipped = true;
    return branch;
  }
  const Matrixd op = kron(pauli(Pauli::I), pauli(rule.for_outcome(branch.outcome)));
  branch.post_state = Ket4(op * *branch.post_state);
  return branch;
}

std::array<double, 4> bell_measure(const Ket4& state) {
  std::array<double, 4> p{};
  for (std::size_t i = 0; i < 4; ++i) {
    p[i] = fidelity(bell_ket(kBellStates[i]), state);
  }
  return p;
}

double dense_coding_capacity(const Ket4& shared) {
  std::array<double, 4> marginal{};
  double conditional = 0;
  for (const auto& op : encodings()) {
    const auto p = bell_measure(Ket4(op * shared));
    conditional += entropy_bits(p) / 4.0;
    for (std::size_t y = 0; y < 4; ++y) marginal[y] += p[y] / 4.0;
  }
  return std::clamp(entropy_bits(marginal) - conditional, 0.0, 2.0);
}

CdcReport run_cdc(const PureState3& state, int controller, const ControllerBasis& basis,
                  const CorrectionRule& rule) {
  CdcReport report;
  report.controller = controller;
  report.basis = basis;
  report.perfect_cdc = true;
  double min_capacity = 2.0;
  for (auto& raw : controller_measure(state, controller, basis)) {
    BranchReport br;
    br.branch = apply_correction(std::move(raw), rule);
    br.reachable = br.branch.post_state.has_value();
    if (br.reachable) {
      const Ket4& post = *br.branch.post_state;
      const auto p = bell_measure(post);
      const auto best = static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
      br.best_bell = kBellStates[best];
      br.best_bell_fidelity = p[best];
      br.capacity_bits = dense_coding_capacity(post);
      report.average_capacity_bits += br.branch.probability * br.capacity_bits;
      min_capacity = std::min(min_capacity, br.capacity_bits);
      if (br.capacity_bits < 2.0 - kPerfectSlack) report.perfect_cdc = false;
    }
    report.branches.push_back(std::move(br));
  }
  report.min_capacity_bits = min_capacity;
  return report;
}

BasisSearchResult optimize_controller_basis(const PureState3& state, int controller, int grid) {
  require_controller(controller);
  if (grid < 8) throw ParameterError("basis search grid must be at least 8");

  BasisSearchResult best{ControllerBasis{}, -1.0};
  for (int i = 0; i <= grid; ++i) {
    const double theta = (pi / 2) * i / grid;
    for (int j = 0; j < grid; ++j) {
      const ControllerBasis basis{theta, 2 * pi * j / grid};
      double worst = 1.0;
      for (const auto& branch : controller_measure(state, controller, basis)) {
        if (branch.post_state) worst = std::min(worst, concurrence_pure2(*branch.post_state));
      }
      if (worst > best.min_branch_concurrence + kTieSlack) best = {basis, worst};
      // every phi is the same basis at theta = 0
      if (i == 0) break;
    }
  }
  return best;
}

CdcVerdict cdc_usable(const PureState3& state, int grid) {
  CdcVerdict verdict;
  verdict.profile = profile(state);
  verdict.usable = verdict.profile.slocc_class.kind == SloccClass::Kind::GhzClass;
  verdict.search = optimize_controller_basis(state, kQubitA, grid);
  verdict.report = run_cdc(state, kQubitA, verdict.search.basis, CorrectionRule{});
  return verdict;
}

}  // namespace tricdc
