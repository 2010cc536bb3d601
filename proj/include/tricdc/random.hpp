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

// Seeded random states and local unitaries for property checks.

#pragma once

#include <random>

#include "tricdc/states.hpp"

namespace tricdc {

/// Gaussian amplitudes, normalized: uniform on the unit sphere of C^8.
inline PureState3 random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Ket8 v;
  for (auto& z : v) z = {normal(rng), normal(rng)};
  return PureState3::normalized(v);
}

/// Haar-random 2x2 unitary from the QR decomposition of a Ginibre matrix.
inline Matrixd random_unitary2(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Matrix2cd g;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = {normal(rng), normal(rng)};
  }
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

}  // namespace tricdc
