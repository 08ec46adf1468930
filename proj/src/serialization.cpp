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

#include "qcirculant/serialization.hpp"

#include <stdexcept>
#include <string>

namespace qcirc {

namespace {

using nlohmann::json;

json complex_to_json(const ComplexAmp& a) { return json::array({a.real(), a.imag()}); }

ComplexAmp complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("complex value must be a [re, im] pair");
    }
    return ComplexAmp{j[0].get<double>(), j[1].get<double>()};
}

std::string kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::Hadamard:
            return "hadamard";
        case GateKind::Phase:
            return "phase";
        case GateKind::ControlledPhase:
            return "controlled_phase";
        case GateKind::Swap:
            return "swap";
    }
    throw std::logic_error("unknown gate kind");
}

GateKind kind_from_name(const std::string& name) {
    if (name == "hadamard") {
        return GateKind::Hadamard;
    }
    if (name == "phase") {
        return GateKind::Phase;
    }
    if (name == "controlled_phase") {
        return GateKind::ControlledPhase;
    }
    if (name == "swap") {
        return GateKind::Swap;
    }
    throw std::invalid_argument("unknown gate kind: " + name);
}

}  // namespace

json state_to_json(const StateVector& state) {
    json amps = json::array();
    for (const auto& a : state.amps) {
        amps.push_back(complex_to_json(a));
    }
    return json{{"num_qubits", state.num_qubits}, {"amps", std::move(amps)}};
}

StateVector state_from_json(const json& j) {
    std::vector<ComplexAmp> amps;
    for (const auto& item : j.at("amps")) {
        amps.push_back(complex_from_json(item));
    }
    return StateVector(j.at("num_qubits").get<int>(), std::move(amps));
}

json circuit_to_json(const Circuit& circuit) {
    json gates = json::array();
    for (const auto& g : circuit.gates) {
        json item{{"kind", kind_name(g.kind)}, {"target", g.target}};
        json controls = json::array();
        switch (g.kind) {
            case GateKind::Phase:
                item["theta"] = g.theta;
                break;
            case GateKind::ControlledPhase:
                item["theta"] = g.theta;
                controls.push_back(g.control);
                break;
            case GateKind::Swap:
                item["target2"] = g.target2;
                break;
            case GateKind::Hadamard:
                break;
        }
        item["controls"] = std::move(controls);
        gates.push_back(std::move(item));
    }
    return json{{"num_qubits", circuit.num_qubits}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
    Circuit circuit(j.at("num_qubits").get<int>());
    for (const auto& item : j.at("gates")) {
        Gate g;
        g.kind = kind_from_name(item.at("kind").get<std::string>());
        g.target = item.at("target").get<int>();
        switch (g.kind) {
            case GateKind::Phase:
                g.theta = item.at("theta").get<double>();
                break;
            case GateKind::ControlledPhase: {
                g.theta = item.at("theta").get<double>();
                const auto& controls = item.at("controls");
                if (!controls.is_array() || controls.size() != 1) {
                    throw std::invalid_argument("controlled_phase needs exactly one control");
                }
                g.control = controls[0].get<int>();
                break;
            }
            case GateKind::Swap:
                g.target2 = item.at("target2").get<int>();
                break;
            case GateKind::Hadamard:
                break;
        }
        circuit.add(g);
    }
    return circuit;
}

json spec_to_json(const CirculantSpec& spec) {
    json coeffs = json::array();
    for (const auto& c : spec.coeffs) {
        coeffs.push_back(complex_to_json(c));
    }
    return coeffs;
}

CirculantSpec spec_from_json(const json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("circulant coefficients must be an array of [re, im]");
    }
    CirculantSpec spec;
    for (const auto& item : j) {
        spec.coeffs.push_back(complex_from_json(item));
    }
    return spec;
}

json dense_to_json(const DenseOperator& op) {
    json rows = json::array();
    for (std::size_t i = 0; i < op.dim; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < op.dim; ++j) {
            row.push_back(complex_to_json(op.at(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json counts_to_json(const GateCounts& counts) {
    return json{{"num_qubits", counts.num_qubits},
                {"hadamard", counts.hadamard},
                {"phase", counts.phase},
                {"controlled_phase", counts.controlled_phase},
                {"swap", counts.swap}};
}

json budget_to_json(const VpGateBudget& budget) {
    return json{{"total_qubits", budget.total_qubits},
                {"central_controlled_phase", budget.central_controlled_phase},
                {"qft", counts_to_json(budget.qft)},
                {"total", counts_to_json(budget.total)}};
}

json histogram_to_json(const SampleHistogram& hist) {
    json counts = json::array();
    for (const auto& [key, count] : hist.counts) {
        counts.push_back(json{{"block", key.first}, {"position", key.second}, {"count", count}});
    }
    return json{{"shots", hist.shots},
                {"seed", hist.seed},
                {"main_qubits", hist.main_qubits},
                {"counts", std::move(counts)}};
}

json decoding_to_json(const RotationDecoding& decoding) {
    return json{{"blocks", decoding.blocks}, {"sentinel_pos", decoding.sentinel_pos}};
}

}  // namespace qcirc
