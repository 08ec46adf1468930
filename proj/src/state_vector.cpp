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

#include "qcirculant/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcirc {

StateVector::StateVector(int num_qubits, std::vector<ComplexAmp> amplitudes)
    : num_qubits(num_qubits), amps(std::move(amplitudes)) {
    validate();
}

StateVector StateVector::zero_state(int num_qubits) {
    return basis_state(num_qubits, 0);
}

StateVector StateVector::basis_state(int num_qubits, std::size_t index) {
    if (num_qubits < 1 || num_qubits > 62) {
        throw std::invalid_argument("num_qubits must be in [1, 62]");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis index out of range");
    }
    StateVector st;
    st.num_qubits = num_qubits;
    st.amps.assign(dim, ComplexAmp{0.0, 0.0});
    st.amps[index] = ComplexAmp{1.0, 0.0};
    return st;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& a : amps) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

void StateVector::validate() const {
    if (num_qubits < 1) {
        throw std::invalid_argument("state must have at least one qubit");
    }
    if (amps.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude count is not 2^num_qubits (got " +
                                    std::to_string(amps.size()) + ")");
    }
    for (const auto& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("state contains a non-finite amplitude");
        }
    }
}

}  // namespace qcirc
