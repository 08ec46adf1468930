// Copyright 2026 The qcirculant developers
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

#ifndef QCIRCULANT_SERIALIZATION_HPP_
#define QCIRCULANT_SERIALIZATION_HPP_

#include <json.hpp>

#include "qcirculant/circuit.hpp"
#include "qcirculant/circulant.hpp"
#include "qcirculant/dense_operator.hpp"
#include "qcirculant/shift_circuits.hpp"
#include "qcirculant/state_vector.hpp"
#include "qcirculant/string_pipeline.hpp"

// JSON forms are fixed in docs/schemas.md; field names here are the schema.

namespace qcirc {

nlohmann::json state_to_json(const StateVector& state);
StateVector state_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const CirculantSpec& spec);
CirculantSpec spec_from_json(const nlohmann::json& j);

nlohmann::json dense_to_json(const DenseOperator& op);

nlohmann::json counts_to_json(const GateCounts& counts);
nlohmann::json budget_to_json(const VpGateBudget& budget);

nlohmann::json histogram_to_json(const SampleHistogram& hist);
nlohmann::json decoding_to_json(const RotationDecoding& decoding);

}  // namespace qcirc

#endif  // QCIRCULANT_SERIALIZATION_HPP_
