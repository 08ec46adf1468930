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

#ifndef QCIRCULANT_STATE_VECTOR_HPP_
#define QCIRCULANT_STATE_VECTOR_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace qcirc {

using ComplexAmp = std::complex<double>;

/// Normalized amplitude vector over `num_qubits` qubits.
///
/// Qubit k is the 2^k bit of the basis index, so amps[j] is the amplitude
/// of the computational basis state whose binary expansion is j.
struct StateVector {
    int num_qubits = 0;
    std::vector<ComplexAmp> amps;

    StateVector() = default;
    StateVector(int num_qubits, std::vector<ComplexAmp> amplitudes);

    /// |0...0>
    static StateVector zero_state(int num_qubits);
    /// Basis state |index>.
    static StateVector basis_state(int num_qubits, std::size_t index);

    std::size_t dim() const { return amps.size(); }
    double norm() const;

    /// Throws std::invalid_argument if the length is not 2^num_qubits or
    /// any amplitude is non-finite.
    void validate() const;
};

}  // namespace qcirc

#endif  // QCIRCULANT_STATE_VECTOR_HPP_
