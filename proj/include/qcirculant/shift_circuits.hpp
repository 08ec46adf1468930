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

#ifndef QCIRCULANT_SHIFT_CIRCUITS_HPP_
#define QCIRCULANT_SHIFT_CIRCUITS_HPP_

#include <cstdint>
#include <vector>

#include "qcirculant/circuit.hpp"
#include "qcirculant/dense_operator.hpp"

namespace qcirc {

/// Register layout for the block-shift circuit: main register = qubits
/// 0..q-1, ancilla register = qubits q..2q-1 (the high bits, so ancilla
/// value j selects the contiguous amplitude block [j*n, (j+1)*n)).
///
/// phase_sign is the sign of every phase angle emitted by the builders
/// below. The default -1 is calibrated once against v_p_dense(4): with the
/// forward transform using w = exp(+2*pi*i/n) and P = shift-down, the
/// eigenvalue of P on Fourier column k is w^{-k}, so the diagonal band needs
/// negated angles for the conjugated circuit to equal the dense operator.
struct ShiftCircuitPlan {
    int main_qubits = 1;
    int ancilla_qubits = 1;
    int phase_sign = -1;
};

/// Plan for the full block-shift circuit on 2q qubits.
ShiftCircuitPlan vp_plan(int main_qubits);

/// Diagonal phase circuit: unitary diag(w^{sign * j * power}) for
/// j = 0..2^q-1, w = exp(2*pi*i/2^q). Realized as exactly q single-qubit
/// phase gates; the gate on qubit k carries angle sign*2*pi*2^k*power/2^q.
/// Any power >= 0 is legal (power 0 gives the identity; angles that reach
/// 2*pi are emitted literally).
Circuit lambda_p_circuit(int num_qubits, std::int64_t power, int phase_sign = +1);

/// The k-th controlled band of the block-shift circuit, on the 2q-qubit
/// layout above: exactly q controlled-phase gates, all controlled on
/// ancilla qubit k (global index q+k); the gate targeting main qubit m
/// carries angle sign*2*pi*2^m*2^k/2^q. With the ancilla bit set, the band
/// applies the diagonal of lambda_p_circuit(q, 2^k, sign) to the main
/// register; with it clear, nothing happens. Requires 0 <= k < q.
std::vector<Gate> u_p_gates(int main_qubits, int k, int phase_sign = +1);

/// Full block-shift circuit on 2q qubits: inverse transform on the main
/// register, the q controlled bands for k = 0..q-1, then the forward
/// transform on the main register. Its unitary equals v_p_dense(2^q):
/// block-diagonal(P^0, P^1, ..., P^{n-1}) indexed by the ancilla value.
Circuit v_p_circuit(int main_qubits);

/// Dense oracle: the n^2 x n^2 block-diagonal permutation matrix whose j-th
/// diagonal block is dense_shift(n)^j. Requires n a power of two, n <= 32.
DenseOperator v_p_dense(std::size_t n);

/// Gate and qubit budget of v_p_circuit(q). The central band contributes
/// exactly q^2 controlled-phase gates; the two transforms are tallied
/// separately (qft = one forward transform).
struct VpGateBudget {
    int total_qubits = 0;
    std::int64_t central_controlled_phase = 0;
    GateCounts qft;
    GateCounts total;
};

VpGateBudget v_p_gate_budget(int main_qubits);

}  // namespace qcirc

#endif  // QCIRCULANT_SHIFT_CIRCUITS_HPP_
