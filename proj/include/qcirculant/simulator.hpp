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

#ifndef QCIRCULANT_SIMULATOR_HPP_
#define QCIRCULANT_SIMULATOR_HPP_

#include "qcirculant/circuit.hpp"
#include "qcirculant/dense_operator.hpp"
#include "qcirculant/state_vector.hpp"

namespace qcirc {

/// Largest qubit count for which a dense unitary is extracted (1024-dim).
inline constexpr int kDenseQubitCap = 10;

/// Applies one gate and returns the new state; the input is left untouched.
/// Gates act by stride iteration over amplitude pairs, single-threaded, so
/// results are bit-for-bit reproducible.
StateVector apply_gate(const StateVector& state, const Gate& gate);

/// Left-to-right composition of apply_gate over the circuit's gate list.
StateVector run_circuit(const StateVector& state, const Circuit& circuit);

/// Dense unitary of the circuit: column j is the circuit applied to |j>.
/// Throws std::invalid_argument above the qubit cap.
DenseOperator circuit_unitary(const Circuit& circuit, int max_qubits = kDenseQubitCap);

/// Quantum Fourier transform on `num_qubits` qubits. The unitary equals the
/// normalized DFT matrix F[j][k] = w^{jk}/sqrt(n) with w = exp(+2*pi*i/n),
/// n = 2^num_qubits, under the 2^k bit-order convention. The final swap
/// network is included so equality is entrywise.
Circuit qft_circuit(int num_qubits);

/// Exact inverse of qft_circuit: reversed gate order, negated angles.
Circuit inverse_qft_circuit(int num_qubits);

}  // namespace qcirc

#endif  // QCIRCULANT_SIMULATOR_HPP_
