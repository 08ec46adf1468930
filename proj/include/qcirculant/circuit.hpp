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

#ifndef QCIRCULANT_CIRCUIT_HPP_
#define QCIRCULANT_CIRCUIT_HPP_

#include <cstdint>
#include <vector>

namespace qcirc {

enum class GateKind {
    Hadamard,
    Phase,            // diag(1, e^{i*theta}) on the target qubit
    ControlledPhase,  // e^{i*theta} iff control and target are both |1>
    Swap,
};

/// One gate of the fixed set. theta is stored exactly as given; no modular
/// reduction is applied (angles of 2*pi are legal and kept literally).
struct Gate {
    GateKind kind = GateKind::Hadamard;
    double theta = 0.0;  // Phase / ControlledPhase only
    int target = 0;
    int target2 = -1;  // Swap only
    int control = -1;  // ControlledPhase only

    static Gate hadamard(int target);
    static Gate phase(double theta, int target);
    static Gate controlled_phase(double theta, int control, int target);
    static Gate swap(int a, int b);
};

/// Throws std::out_of_range / std::invalid_argument if the gate does not fit
/// a circuit over `num_qubits` qubits (bad indices, duplicate qubits,
/// non-finite angle).
void validate_gate(const Gate& gate, int num_qubits);

/// Ordered gate sequence over a fixed qubit count.
struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int num_qubits) : num_qubits(num_qubits) {}

    /// Validates and appends. Returns *this for chaining.
    Circuit& add(const Gate& gate);
    /// Appends all gates of `other` (qubit counts must match).
    Circuit& append(const Circuit& other);
};

struct GateCounts {
    int num_qubits = 0;
    std::int64_t hadamard = 0;
    std::int64_t phase = 0;
    std::int64_t controlled_phase = 0;
    std::int64_t swap = 0;

    std::int64_t total() const { return hadamard + phase + controlled_phase + swap; }
    bool operator==(const GateCounts&) const = default;
};

/// Exact per-kind gate tally.
GateCounts gate_counts(const Circuit& circuit);

}  // namespace qcirc

#endif  // QCIRCULANT_CIRCUIT_HPP_
