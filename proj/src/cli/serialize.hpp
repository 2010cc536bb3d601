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

#include <string>

#include "json.hpp"
#include "tricdc/cdc.hpp"
#include "tricdc/entanglement.hpp"
#include "tricdc/state_spec.hpp"

namespace tricdc::cli {

using json = nlohmann::json;

json to_json(const EntanglementProfile& p);

/// Validates a profile document against the emitted schema and rebuilds it.
/// Throws ParseError on a missing field, wrong type, out-of-range value, or
/// tau/tau_ckw that disagree with the C^2 fields by more than 1e-6.
EntanglementProfile profile_from_json(const json& doc);

json to_json(const Ket4& ket);
json to_json(const PureState3& state);
json to_json(const CdcReport& report);
json to_json(const BasisSearchResult& search);

std::string pauli_label(Pauli p);

/// "%.12g", with negative zero printed as 0.
std::string format_real(double value);

}  // namespace tricdc::cli
