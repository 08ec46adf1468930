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

#include "qcirculant/simulator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qcirc {

namespace {

void hadamard_inplace(std::vector<ComplexAmp>& amps, int target) {
    const std::size_t bit = std::size_t{1} << target;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (std::size_t base = 0; base < amps.size(); base += 2 * bit) {
        for (std::size_t off = 0; off < bit; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + bit;
            const ComplexAmp lo = amps[i0];
            const ComplexAmp hi = amps[i1];
            amps[i0] = inv_sqrt2 * (lo + hi);
            amps[i1] = inv_sqrt2 * (lo - hi);
        }
    }
}

void phase_inplace(std::vector<ComplexAmp>& amps, int target, double theta) {
    const std::size_t bit = std::size_t{1} << target;
    const ComplexAmp factor = std::polar(1.0, theta);
    for (std::size_t base = 0; base < amps.size(); base += 2 * bit) {
        for (std::size_t off = 0; off < bit; ++off) {
            amps[base + bit + off] *= factor;
        }
    }
}

void controlled_phase_inplace(std::vector<ComplexAmp>& amps, int control, int target,
                              double theta) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    const ComplexAmp factor = std::polar(1.0, theta);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cbit) != 0 && (i & tbit) != 0) {
            amps[i] *= factor;
        }
    }
}

void swap_inplace(std::vector<ComplexAmp>& amps, int a, int b) {
    const std::size_t abit = std::size_t{1} << a;
    const std::size_t bbit = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & abit) != 0 && (i & bbit) == 0) {
            std::swap(amps[i], amps[i ^ abit ^ bbit]);
        }
    }
}

void apply_gate_inplace(std::vector<ComplexAmp>& amps, const Gate& gate) {
    switch (gate.kind) {
        case GateKind::Hadamard:
            hadamard_inplace(amps, gate.target);
            break;
        case GateKind::Phase:
            phase_inplace(amps, gate.target, gate.theta);
            break;
        case GateKind::ControlledPhase:
            controlled_phase_inplace(amps, gate.control, gate.target, gate.theta);
            break;
        case GateKind::Swap:
            swap_inplace(amps, gate.target, gate.target2);
            break;
    }
}

}  // namespace

StateVector apply_gate(const StateVector& state, const Gate& gate) {
    validate_gate(gate, state.num_qubits);
    StateVector out = state;
    apply_gate_inplace(out.amps, gate);
    return out;
}

StateVector run_circuit(const StateVector& state, const Circuit& circuit) {
    if (state.num_qubits != circuit.num_qubits) {
        throw std::invalid_argument("state and circuit qubit counts differ");
    }
    StateVector out = state;
    for (const auto& gate : circuit.gates) {
        validate_gate(gate, out.num_qubits);
        apply_gate_inplace(out.amps, gate);
    }
    return out;
}

DenseOperator circuit_unitary(const Circuit& circuit, int max_qubits) {
    if (circuit.num_qubits > max_qubits) {
        throw std::invalid_argument("circuit exceeds the dense extraction cap");
    }
    const std::size_t dim = std::size_t{1} << circuit.num_qubits;
    DenseOperator op(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const StateVector column =
            run_circuit(StateVector::basis_state(circuit.num_qubits, col), circuit);
        for (std::size_t row = 0; row < dim; ++row) {
            op.at(row, col) = column.amps[row];
        }
    }
    return op;
}

Circuit qft_circuit(int num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("qft needs at least one qubit");
    }
    Circuit circuit(num_qubits);
    // Highest qubit first; the controlled angle between qubits c < t is
    // pi / 2^{t-c}. The closing swap network reverses the bit order so the
    // unitary matches the DFT matrix entrywise.
    for (int target = num_qubits - 1; target >= 0; --target) {
        circuit.add(Gate::hadamard(target));
        for (int control = target - 1; control >= 0; --control) {
            const double theta =
                std::numbers::pi / static_cast<double>(std::size_t{1} << (target - control));
            circuit.add(Gate::controlled_phase(theta, control, target));
        }
    }
    for (int k = 0; k < num_qubits / 2; ++k) {
        circuit.add(Gate::swap(k, num_qubits - 1 - k));
    }
    return circuit;
}

Circuit inverse_qft_circuit(int num_qubits) {
    const Circuit forward = qft_circuit(num_qubits);
    Circuit inverse(num_qubits);
    for (auto it = forward.gates.rbegin(); it != forward.gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::Phase || g.kind == GateKind::ControlledPhase) {
            g.theta = -g.theta;
        }
        inverse.add(g);
    }
    return inverse;
}

}  // namespace qcirc
