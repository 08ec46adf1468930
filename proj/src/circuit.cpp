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

#include "qcirculant/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace qcirc {

Gate Gate::hadamard(int target) {
    Gate g;
    g.kind = GateKind::Hadamard;
    g.target = target;
    return g;
}

Gate Gate::phase(double theta, int target) {
    Gate g;
    g.kind = GateKind::Phase;
    g.theta = theta;
    g.target = target;
    return g;
}

Gate Gate::controlled_phase(double theta, int control, int target) {
    Gate g;
    g.kind = GateKind::ControlledPhase;
    g.theta = theta;
    g.control = control;
    g.target = target;
    return g;
}

Gate Gate::swap(int a, int b) {
    Gate g;
    g.kind = GateKind::Swap;
    g.target = a;
    g.target2 = b;
    return g;
}

void validate_gate(const Gate& gate, int num_qubits) {
    auto check_index = [num_qubits](int q) {
        if (q < 0 || q >= num_qubits) {
            throw std::out_of_range("gate qubit index out of range");
        }
    };
    check_index(gate.target);
    switch (gate.kind) {
        case GateKind::Hadamard:
            break;
        case GateKind::Phase:
            if (!std::isfinite(gate.theta)) {
                throw std::invalid_argument("phase angle must be finite");
            }
            break;
        case GateKind::ControlledPhase:
            if (!std::isfinite(gate.theta)) {
                throw std::invalid_argument("phase angle must be finite");
            }
            check_index(gate.control);
            if (gate.control == gate.target) {
                throw std::invalid_argument("control and target must be distinct");
            }
            break;
        case GateKind::Swap:
            check_index(gate.target2);
            if (gate.target2 == gate.target) {
                throw std::invalid_argument("swap targets must be distinct");
            }
            break;
    }
}

Circuit& Circuit::add(const Gate& gate) {
    validate_gate(gate, num_qubits);
    gates.push_back(gate);
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.num_qubits != num_qubits) {
        throw std::invalid_argument("appended circuit has a different qubit count");
    }
    for (const auto& g : other.gates) {
        gates.push_back(g);
    }
    return *this;
}

GateCounts gate_counts(const Circuit& circuit) {
    GateCounts counts;
    counts.num_qubits = circuit.num_qubits;
    for (const auto& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::Hadamard:
                ++counts.hadamard;
                break;
            case GateKind::Phase:
                ++counts.phase;
                break;
            case GateKind::ControlledPhase:
                ++counts.controlled_phase;
                break;
            case GateKind::Swap:
                ++counts.swap;
                break;
        }
    }
    return counts;
}

}  // namespace qcirc
