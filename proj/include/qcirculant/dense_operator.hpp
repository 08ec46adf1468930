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

#ifndef QCIRCULANT_DENSE_OPERATOR_HPP_
#define QCIRCULANT_DENSE_OPERATOR_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "qcirculant/state_vector.hpp"

namespace qcirc {

/// Row-major dense square matrix of complex entries. Used for oracle
/// construction and verification, not as a simulation path.
struct DenseOperator {
    std::size_t dim = 0;
    std::vector<ComplexAmp> entries;  // dim*dim, row-major

    DenseOperator() = default;
    explicit DenseOperator(std::size_t dim);

    static DenseOperator identity(std::size_t dim);

    ComplexAmp& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
    const ComplexAmp& at(std::size_t row, std::size_t col) const {
        return entries[row * dim + col];
    }

    DenseOperator operator*(const DenseOperator& rhs) const;
    std::vector<ComplexAmp> apply(std::span<const ComplexAmp> x) const;
    DenseOperator adjoint() const;

    /// max_{i,j} |this - other| entrywise.
    double max_abs_diff(const DenseOperator& other) const;
    /// max-entry |U†U - I| <= tol.
    bool is_unitary(double tol) const;
};

}  // namespace qcirc

#endif  // QCIRCULANT_DENSE_OPERATOR_HPP_
