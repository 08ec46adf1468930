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

#include "qcirculant/shift_circuits.hpp"

#include <bit>
#include <numbers>
#include <stdexcept>

#include "qcirculant/circulant.hpp"
#include "qcirculant/simulator.hpp"

namespace qcirc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double band_angle(int main_qubits, int target, std::int64_t power, int phase_sign) {
    const double n = static_cast<double>(std::size_t{1} << main_qubits);
    return phase_sign * kTwoPi * static_cast<double>(std::size_t{1} << target) *
           static_cast<double>(power) / n;
}

}  // namespace

ShiftCircuitPlan vp_plan(int main_qubits) {
    if (main_qubits < 1) {
        throw std::invalid_argument("plan needs at least one main qubit");
    }
    return ShiftCircuitPlan{main_qubits, main_qubits, -1};
}

Circuit lambda_p_circuit(int num_qubits, std::int64_t power, int phase_sign) {
    if (num_qubits < 1) {
        throw std::invalid_argument("lambda_p_circuit needs at least one qubit");
    }
    if (power < 0) {
        throw std::invalid_argument("power must be nonnegative");
    }
    Circuit circuit(num_qubits);
    for (int k = 0; k < num_qubits; ++k) {
        circuit.add(Gate::phase(band_angle(num_qubits, k, power, phase_sign), k));
    }
    return circuit;
}

std::vector<Gate> u_p_gates(int main_qubits, int k, int phase_sign) {
    if (main_qubits < 1) {
        throw std::invalid_argument("u_p_gates needs at least one main qubit");
    }
    if (k < 0 || k >= main_qubits) {
        throw std::out_of_range("control index k must satisfy 0 <= k < main_qubits");
    }
    const int control = main_qubits + k;
    const std::int64_t power = std::int64_t{1} << k;
    std::vector<Gate> gates;
    gates.reserve(main_qubits);
    for (int m = 0; m < main_qubits; ++m) {
        gates.push_back(
            Gate::controlled_phase(band_angle(main_qubits, m, power, phase_sign), control, m));
    }
    return gates;
}

Circuit v_p_circuit(int main_qubits) {
    const ShiftCircuitPlan plan = vp_plan(main_qubits);
    const int q = plan.main_qubits;
    Circuit circuit(q + plan.ancilla_qubits);
    // The transforms act on the main register only; its qubit indices in the
    // 2q layout coincide with a q-qubit circuit's, so gates carry over as-is.
    for (const auto& g : inverse_qft_circuit(q).gates) {
        circuit.add(g);
    }
    for (int k = 0; k < q; ++k) {
        for (const auto& g : u_p_gates(q, k, plan.phase_sign)) {
            circuit.add(g);
        }
    }
    for (const auto& g : qft_circuit(q).gates) {
        circuit.add(g);
    }
    return circuit;
}

DenseOperator v_p_dense(std::size_t n) {
    if (!std::has_single_bit(n)) {
        throw std::invalid_argument("block size must be a power of two");
    }
    if (n > 32) {
        throw std::invalid_argument("block size capped at 32 (1024-dim operator)");
    }
    DenseOperator op(n * n);
    for (std::size_t block = 0; block < n; ++block) {
        // Block `block` is the shift-down permutation iterated `block` times:
        // column i holds a 1 in row (i + block) mod n.
        for (std::size_t i = 0; i < n; ++i) {
            op.at(block * n + (i + block) % n, block * n + i) = ComplexAmp{1.0, 0.0};
        }
    }
    return op;
}

VpGateBudget v_p_gate_budget(int main_qubits) {
    const ShiftCircuitPlan plan = vp_plan(main_qubits);
    VpGateBudget budget;
    budget.total_qubits = plan.main_qubits + plan.ancilla_qubits;
    budget.central_controlled_phase =
        static_cast<std::int64_t>(plan.main_qubits) * plan.main_qubits;
    budget.qft = gate_counts(qft_circuit(plan.main_qubits));
    budget.total = gate_counts(v_p_circuit(plan.main_qubits));
    return budget;
}

}  // namespace qcirc
