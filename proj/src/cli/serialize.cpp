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

#include "cli/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace tricdc::cli {

namespace {

json complex_pair(Complexd z) { return json::array({z.real(), z.imag()}); }

template <typename T>
T field(const json& doc, const char* name) {
  if (!doc.contains(name)) throw ParseError(std::string("profile: missing field '") + name + "'");
  const json& v = doc.at(name);
  if constexpr (std::is_same_v<T, int>) {
    if (!v.is_number_integer()) throw ParseError(std::string("profile: '") + name + "' must be an integer");
  } else if constexpr (std::is_same_v<T, double>) {
    if (!v.is_number()) throw ParseError(std::string("profile: '") + name + "' must be a number");
  } else {
    if (!v.is_string()) throw ParseError(std::string("profile: '") + name + "' must be a string");
  }
  return v.get<T>();
}

}  // namespace

json to_json(const EntanglementProfile& p) {
  return json{{"rank_a", p.rank_a},   {"rank_b", p.rank_b}, {"rank_c", p.rank_c},
              {"c2_a_bc", p.c2_a_bc}, {"c2_ab", p.c2_ab},   {"c2_ac", p.c2_ac},
              {"tau", p.tau},         {"tau_ckw", p.tau_ckw}, {"class", to_string(p.slocc_class)}};
}

EntanglementProfile profile_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("profile: expected an object");
  EntanglementProfile p;
  p.rank_a = field<int>(doc, "rank_a");
  p.rank_b = field<int>(doc, "rank_b");
  p.rank_c = field<int>(doc, "rank_c");
  for (int r : {p.rank_a, p.rank_b, p.rank_c}) {
    if (r != 1 && r != 2) throw ParseError("profile: ranks must be 1 or 2");
  }
  p.c2_a_bc = field<double>(doc, "c2_a_bc");
  p.c2_ab = field<double>(doc, "c2_ab");
  p.c2_ac = field<double>(doc, "c2_ac");
  p.tau = field<double>(doc, "tau");
  p.tau_ckw = field<double>(doc, "tau_ckw");
  for (double v : {p.c2_a_bc, p.c2_ab, p.c2_ac, p.tau, p.tau_ckw}) {
    if (!(v >= 0.0 && v <= 1.0)) throw ParseError("profile: measures must lie in [0, 1]");
  }
  const double residual = std::max(0.0, p.c2_a_bc - p.c2_ab - p.c2_ac);
  if (std::abs(residual - p.tau_ckw) > 1e-6 || std::abs(p.tau - p.tau_ckw) > 1e-6) {
    throw ParseError("profile: tau fields are inconsistent with the concurrences");
  }
  const auto cls = slocc_class_from_string(field<std::string>(doc, "class"));
  if (!cls) throw ParseError("profile: unknown class label");
  p.slocc_class = *cls;
  return p;
}

json to_json(const Ket4& ket) {
  json out = json::array();
  for (const auto& z : ket) out.push_back(complex_pair(z));
  return out;
}

json to_json(const PureState3& state) {
  json amps = json::array();
  for (const auto& z : state.amplitudes()) amps.push_back(complex_pair(z));
  return json{{"amplitudes", amps}};
}

std::string pauli_label(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "x";
    case Pauli::Y: return "y";
    case Pauli::Z: return "z";
  }
  return "?";
}

json to_json(const CdcReport& report) {
  json branches = json::array();
  for (const auto& br : report.branches) {
    json b{{"outcome", br.branch.outcome},
           {"probability", br.branch.probability},
           {"reachable", br.reachable},
           {"correction_skipped", br.branch.correction_skipped}};
    if (br.reachable) {
      b["post_state"] = to_json(*br.branch.post_state);
      b["best_bell"] = std::string(to_string(br.best_bell));
      b["best_bell_fidelity"] = br.best_bell_fidelity;
      b["capacity_bits"] = br.capacity_bits;
    } else {
      b["post_state"] = nullptr;
    }
    branches.push_back(std::move(b));
  }
  return json{{"controller", std::string(1, qubit_name(report.controller))},
              {"basis", {{"theta", report.basis.theta}, {"phi", report.basis.phi}}},
              {"branches", branches},
              {"average_capacity_bits", report.average_capacity_bits},
              {"min_capacity_bits", report.min_capacity_bits},
              {"perfect_cdc", report.perfect_cdc}};
}

json to_json(const BasisSearchResult& search) {
  return json{{"theta", search.basis.theta},
              {"phi", search.basis.phi},
              {"min_branch_concurrence", search.min_branch_concurrence}};
}

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace tricdc::cli
