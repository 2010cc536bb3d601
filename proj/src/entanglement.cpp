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

#include "tricdc/entanglement.hpp"

#include <cmath>

namespace tricdc {

namespace {

// Values in [-kClampSlack, 0) snap to 0, values in (1, 1 + kClampSlack] snap
// to 1; anything further out is a numerical bug.
constexpr double kClampSlack = 1e-9;

// Eigenvalues of rho below this fraction of the largest are treated as
// structural zeros in the spin-flip construction.
constexpr long double kSupportCutoff = 1e-14L;

double clamp_unit(double value, const char* what) {
  if (value < -kClampSlack || value > 1.0 + kClampSlack || !std::isfinite(value)) {
    throw NumericConsistencyError(std::string(what) + " = " + std::to_string(value) +
                                  " is outside [0, 1]");
  }
  return std::clamp(value, 0.0, 1.0);
}

void require_qubit(int qubit) {
  if (qubit < 0 || qubit > 2) {
    throw ContractViolation("qubit index must be 0, 1 or 2, got " + std::to_string(qubit));
  }
}

}  // namespace

char qubit_name(int qubit) {
  require_qubit(qubit);
  return static_cast<char>('a' + qubit);
}

std::string to_string(const SloccClass& cls) {
  switch (cls.kind) {
    case SloccClass::Kind::Product: return "Product";
    case SloccClass::Kind::WClass: return "WClass";
    case SloccClass::Kind::GhzClass: return "GhzClass";
    case SloccClass::Kind::Biseparable: {
      static const char* const kLabels[] = {"Biseparable(a|bc)", "Biseparable(b|ca)",
                                            "Biseparable(c|ab)"};
      return kLabels[cls.split.value_or(0)];
    }
  }
  return "?";
}

std::optional<SloccClass> slocc_class_from_string(const std::string& label) {
  for (const auto& cls : {SloccClass::product(), SloccClass::biseparable(0), SloccClass::biseparable(1),
                          SloccClass::biseparable(2), SloccClass::w_class(), SloccClass::ghz_class()}) {
    if (to_string(cls) == label) return cls;
  }
  return std::nullopt;
}

DensityMatrixd reduce_one(const PureState3& state, int qubit) {
  require_qubit(qubit);
  return partial_trace(state.projector(), {2, 2, 2}, {qubit});
}

DensityMatrixd reduce_two(const PureState3& state, int first, int second) {
  require_qubit(first);
  require_qubit(second);
  if (first >= second) throw ContractViolation("reduce_two: qubits must be ascending");
  return partial_trace(state.projector(), {2, 2, 2}, {first, second});
}

double concurrence_pure2(const Ket4& state) {
  if (std::abs(state.squaredNorm() - 1.0) > 1e-10) {
    throw ContractViolation("concurrence_pure2: state is not normalized");
  }
  const double c = 2.0 * std::abs(state(0) * state(3) - state(1) * state(2));
  return clamp_unit(c, "pure concurrence");
}

double concurrence_mixed2(const DensityMatrixd& rho) {
  using L = long double;
  if (rho.dim() != 4) throw InvalidDimension("concurrence_mixed2: need a two-qubit density matrix");

  // Work in the eigenbasis W of rho: sqrt(rho) = W D W^dag, so the spectrum of
  // sqrt(rho) rho~ sqrt(rho) equals that of D (W^dag rho~ W) D. Dropping
  // round-off eigenvalues of rho from D keeps the structural zeros exact.
  const auto rho_l = rho.cast<L>();
  const auto& eig = rho_l.eigen();
  const L largest = std::max(eig.values(0), L(0));
  RealVector<L> root(4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    const L mu = eig.values(i);
    root(i) = mu > kSupportCutoff * largest ? std::sqrt(mu) : L(0);
  }

  const Matrix<L> yy = kron(hermitian_pauli_y<L>(), hermitian_pauli_y<L>());
  const Matrix<L> flipped = yy * rho_l.matrix().conjugate() * yy;
  const Matrix<L> w = eig.vectors;
  const auto d = root.template cast<Complex<L>>().asDiagonal();
  Matrix<L> m = d * (w.adjoint() * flipped * w) * d;
  m = (m + m.adjoint()) / L(2);

  const auto spectrum = eig_hermitian(m).values;
  std::array<L, 4> lambda{};
  for (int i = 0; i < 4; ++i) {
    const L v = spectrum(i);
    if (v < -L(tol::kNegativeClamp)) {
      throw NumericConsistencyError("concurrence_mixed2: spin-flip spectrum is negative");
    }
    lambda[static_cast<std::size_t>(i)] = std::sqrt(std::max(v, L(0)));
  }
  const L c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  return std::clamp(static_cast<double>(c), 0.0, 1.0);
}

double c2_one_vs_rest(const PureState3& state, int pivot) {
  const auto rho = reduce_one(state, pivot).matrix();
  const double det = (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
  return clamp_unit(4.0 * det, "C^2 one-vs-rest");
}

double tangle_hyperdet(const PureState3& state) {
  const auto a = [&](int i, int j, int k) { return state.amplitude(i, j, k); };
  const auto sq = [](Complexd z) { return z * z; };

  const Complexd d1 = sq(a(0, 0, 0)) * sq(a(1, 1, 1)) + sq(a(0, 0, 1)) * sq(a(1, 1, 0)) +
                      sq(a(0, 1, 0)) * sq(a(1, 0, 1)) + sq(a(1, 0, 0)) * sq(a(0, 1, 1));

  const Complexd d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                      a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                      a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                      a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                      a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                      a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);

  const Complexd d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                      a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);

  return clamp_unit(4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3), "hyperdeterminant tangle");
}

double tangle_ckw(const PureState3& state, int pivot) {
  require_qubit(pivot);
  double residual = c2_one_vs_rest(state, pivot);
  for (int other = 0; other < 3; ++other) {
    if (other == pivot) continue;
    const auto rho = reduce_two(state, std::min(pivot, other), std::max(pivot, other));
    const double c = concurrence_mixed2(rho);
    residual -= c * c;
  }
  return clamp_unit(residual, "CKW tangle");
}

std::array<int, 3> rank_profile(const PureState3& state, double tol) {
  std::array<int, 3> ranks{};
  for (int q = 0; q < 3; ++q) {
    ranks[static_cast<std::size_t>(q)] = rank_with_tol(reduce_one(state, q), tol);
  }
  return ranks;
}

SloccClass classify(const PureState3& state, double rank_tol, double tangle_tol) {
  const auto ranks = rank_profile(state, rank_tol);
  int ones = 0;
  int split = -1;
  for (int q = 0; q < 3; ++q) {
    if (ranks[static_cast<std::size_t>(q)] == 1) {
      ++ones;
      split = q;
    }
  }
  switch (ones) {
    case 3: return SloccClass::product();
    case 1: return SloccClass::biseparable(split);
    case 0: return tangle_hyperdet(state) > tangle_tol ? SloccClass::ghz_class()
                                                        : SloccClass::w_class();
    default:
      throw NumericConsistencyError("classify: rank profile (" + std::to_string(ranks[0]) + "," +
                                    std::to_string(ranks[1]) + "," + std::to_string(ranks[2]) +
                                    ") cannot occur for a pure state");
  }
}

EntanglementProfile profile(const PureState3& state) {
  EntanglementProfile p;
  const auto ranks = rank_profile(state);
  p.rank_a = ranks[0];
  p.rank_b = ranks[1];
  p.rank_c = ranks[2];
  p.c2_a_bc = c2_one_vs_rest(state, kQubitA);
  const double c_ab = concurrence_mixed2(reduce_two(state, kQubitA, kQubitB));
  const double c_ac = concurrence_mixed2(reduce_two(state, kQubitA, kQubitC));
  p.c2_ab = c_ab * c_ab;
  p.c2_ac = c_ac * c_ac;
  p.tau = tangle_hyperdet(state);
  p.tau_ckw = clamp_unit(p.c2_a_bc - p.c2_ab - p.c2_ac, "CKW tangle");
  if (std::abs(p.tau - p.tau_ckw) > defaults::kRouteMismatch) {
    throw NumericConsistencyError("profile: tangle routes disagree (hyperdeterminant " +
                                  std::to_string(p.tau) + ", CKW " + std::to_string(p.tau_ckw) + ")");
  }
  p.slocc_class = classify(state);
  return p;
}

}  // namespace tricdc
