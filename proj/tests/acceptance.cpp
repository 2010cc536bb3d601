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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/serialize.hpp"
#include "tricdc/cdc.hpp"
#include "tricdc/random.hpp"

using namespace tricdc;
using std::numbers::pi;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> check;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}


PureState3 seeded(int family, Sign sign, Axis k, double eps) {
  return family == 0 ? make_chi(sign, k, eps) : make_xi(sign, k, eps);
}

constexpr Sign kSigns[] = {Sign::Plus, Sign::Minus};
constexpr Axis kAxes[] = {Axis::X, Axis::Y, Axis::Z};

Outcome chi_tangle() {
  double worst = 0;
  for (Sign sign : kSigns) {
    for (Axis k : kAxes) {
      for (int i = 0; i < 50; ++i) {
        const double eps = (pi / 2) * i / 49;
        worst = std::max(worst, std::abs(tangle_hyperdet(make_chi(sign, k, eps)) -
                                         std::pow(std::sin(2 * eps), 2)));
      }
    }
  }
  return {worst < 1e-9, "max error " + num(worst)};
}

Outcome ms_tangle() {
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const double alpha = pi * i / 49;
    worst = std::max(worst, std::abs(tangle_hyperdet(make_ms(alpha)) - std::pow(std::sin(alpha), 2)));
  }
  return {worst < 1e-9, "max error " + num(worst)};
}

Outcome type1_tangle() {
  double worst = 0;
  for (int i = 1; i <= 40; ++i) {
    const double l = 0.1 * i;
    worst = std::max(worst, std::abs(tangle_hyperdet(make_type1(l)) - 4 * l * l / std::pow(1 + l * l, 2)));
  }
  return {worst < 1e-9, "max error " + num(worst)};
}

Outcome ckw_identity() {
  std::mt19937_64 rng(1729);
  double route = 0, pivot = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = random_state(rng);
    const double a = tangle_ckw(s, kQubitA);
    route = std::max(route, std::abs(tangle_hyperdet(s) - a));
    pivot = std::max({pivot, std::abs(tangle_ckw(s, kQubitB) - a), std::abs(tangle_ckw(s, kQubitC) - a)});
  }
  return {route < 1e-8 && pivot < 1e-8, "route gap " + num(route) + ", pivot gap " + num(pivot)};
}

Outcome classifier() {
  int bad = 0, total = 0;
  for (int family = 0; family < 2; ++family) {
    for (Sign sign : kSigns) {
      for (Axis k : kAxes) {
        for (int i = 1; i < 50; ++i) {
          const auto s = seeded(family, sign, k, (pi / 2) * i / 50);
          ++total;
          if (classify(s) != SloccClass::ghz_class() || rank_profile(s) != std::array{2, 2, 2}) ++bad;
        }
      }
    }
  }
  double worst_tau = tangle_hyperdet(make_w());
  if (classify(make_w()) != SloccClass::w_class()) ++bad;
  ++total;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      for (int l = 1; l <= 10; ++l) {
        if (i + j + l > 10) continue;
        const auto s = make_w_class(i / 10.0, j / 10.0, l / 10.0);
        ++total;
        worst_tau = std::max(worst_tau, tangle_hyperdet(s));
        if (classify(s) != SloccClass::w_class()) ++bad;
      }
    }
  }
  return {bad == 0 && worst_tau < 1e-8,
          std::to_string(total - bad) + "/" + std::to_string(total) + " classified, max W tau " + num(worst_tau)};
}

Outcome perfect_cdc() {
  int bad = 0, runs = 0;
  double worst = 0;
  for (int family = 0; family < 2; ++family) {
    for (Sign sign : kSigns) {
      for (Axis k : kAxes) {
        const CorrectionRule rule{{{1, to_pauli(k)}}};
        for (int i = 0; i < 25; ++i) {
          const auto report = run_cdc(seeded(family, sign, k, (pi / 2) * i / 24), kQubitA, ControllerBasis{}, rule);
          ++runs;
          if (!report.perfect_cdc) ++bad;
          for (const auto& b : report.branches) {
            if (b.reachable) worst = std::max(worst, std::abs(b.capacity_bits - 2.0));
          }
        }
      }
    }
  }
  return {bad == 0 && worst < 1e-12,
          std::to_string(runs - bad) + "/" + std::to_string(runs) + " perfect, max |C - 2| " + num(worst)};
}

// Mutual information of the encode/Bell-measure channel, written out by hand:
// sender is the first qubit, encodings I, X, Z, ZX.
double enumerated_capacity(const Ket4& v) {
  const double h = 1 / std::sqrt(2.0);
  const std::array<std::array<Complexd, 4>, 4> bells = {{{h, 0, 0, h}, {h, 0, 0, -h}, {0, h, h, 0}, {0, h, -h, 0}}};
  const std::array<std::array<Complexd, 4>, 4> encoded = {{{v(0), v(1), v(2), v(3)},
                                                           {v(2), v(3), v(0), v(1)},
                                                           {v(0), v(1), -v(2), -v(3)},
                                                           {v(2), v(3), -v(0), -v(1)}}};
  double table[4][4];
  double marginal[4] = {};
  for (int m = 0; m < 4; ++m) {
    for (int y = 0; y < 4; ++y) {
      Complexd amp = 0;
      for (int i = 0; i < 4; ++i) amp += std::conj(bells[y][i]) * encoded[m][i];
      table[m][y] = std::norm(amp);
      marginal[y] += table[m][y] / 4;
    }
  }
  double info = 0;
  for (int m = 0; m < 4; ++m) {
    for (int y = 0; y < 4; ++y) {
      if (table[m][y] > 1e-300) info += 0.25 * table[m][y] * std::log2(table[m][y] / marginal[y]);
    }
  }
  return info;
}

Outcome w_control() {
  const auto report = run_cdc(make_w(), kQubitA, ControllerBasis{}, CorrectionRule{});
  double expected = 0;
  for (const auto& b : controller_measure(make_w(), kQubitA, ControllerBasis{})) {
    expected += b.probability * enumerated_capacity(*b.post_state);
  }
  const bool ok = std::abs(expected - 5.0 / 3) < 1e-12 &&
                  std::abs(report.average_capacity_bits - 5.0 / 3) < 1e-6 &&
                  std::abs(report.min_capacity_bits - 1.0) < 1e-9;
  return {ok, "average " + num(report.average_capacity_bits) + " (enumerated " + num(expected) + "), min " +
                  num(report.min_capacity_bits)};
}

Outcome basis_search() {
  double worst = 0;
  for (double alpha : {pi / 6, pi / 4, pi / 3}) {
    const auto r = optimize_controller_basis(make_ms(alpha), kQubitA, 128);
    worst = std::max(worst, std::abs(r.min_branch_concurrence - std::sin(alpha)));
  }
  return {worst < 2e-3, "max |C - sin a| " + num(worst)};
}

Outcome discrepancy_report() {
  bool ok = true;
  std::string detail;
  for (auto [p, q, r, s] : {std::array{0.5, 0.5, 0.5, 0.5}, std::array{0.8, 0.5, 0.3, std::sqrt(0.02)}}) {
    const auto doc = cli::to_json(profile(make_symmetric(p, q, r, s)));
    const double printed = 4 * (p * p + r * r) * (q * q + s * s);
    ok = ok && doc.contains("c2_a_bc") && doc.contains("tau_ckw") &&
         std::abs(doc["c2_a_bc"].get<double>() - printed) < 1e-12 &&
         std::abs(doc["tau_ckw"].get<double>() - doc["tau"].get<double>()) < 1e-8;
    detail = "symmetric C2_a(bc) " + num(doc["c2_a_bc"].get<double>()) + " vs tau " + num(doc["tau_ckw"].get<double>());
  }
  double gap = 0;
  for (double n : {0.25, 1.0, 2.0, 5.0}) {
    for (double a : {0.0, 0.7, 2.0}) {
      const auto s = make_type2(n, a, 1.3);
      gap = std::max(gap, std::abs(tangle_hyperdet(s) - tangle_ckw(s, kQubitA)));
    }
  }
  return {ok && gap < 1e-8, detail + "; type-II route gap " + num(gap)};
}

Outcome sweep_determinism() {
  const std::vector<std::string> args{"tricdc", "sweep", "--family", "chi_plus", "--param", "k=y", "--vary",
                                      "epsilon", "--from", "0", "--to", "pi/2", "--steps", "26"};
  std::ostringstream first, second, err;
  const int a = cli::run(args, first, err);
  const int b = cli::run(args, second, err);
  const bool ok = a == 0 && b == 0 && !first.str().empty() && first.str() == second.str();
  return {ok, std::to_string(first.str().size()) + " bytes, identical: " + (first.str() == second.str() ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "chi tangle equals sin^2(2 eps)", 1, chi_tangle},
      {2, "maximal slice tangle equals sin^2(alpha)", 1, ms_tangle},
      {3, "type-I tangle equals 4l^2/(1+l^2)^2", 1, type1_tangle},
      {4, "hyperdeterminant and CKW routes agree on random states", 5, ckw_identity},
      {5, "seeded families are GHZ class, W class has zero tangle", 5, classifier},
      {6, "seeded families give perfect controlled dense coding", 5, perfect_cdc},
      {7, "W state capacity is 5/3 on average, 1 at worst", 1, w_control},
      {8, "optimized controller basis reaches sin(alpha) on the maximal slice", 30, basis_search},
      {9, "symmetric and type-II profiles report both tangle routes", 1, discrepancy_report},
      {10, "repeated sweeps are byte-identical", 2, sweep_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result{false, ""};
    try {
      result = c.check();
    } catch (const std::exception& e) {
      result = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = result.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s [%2d] %s: %s (%.3f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                result.detail.c_str(), seconds, c.limit_seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
