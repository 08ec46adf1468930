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

#include "qcirculant/dense_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcirc {

DenseOperator::DenseOperator(std::size_t dim)
    : dim(dim), entries(dim * dim, ComplexAmp{0.0, 0.0}) {}

DenseOperator DenseOperator::identity(std::size_t dim) {
    DenseOperator op(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        op.at(i, i) = ComplexAmp{1.0, 0.0};
    }
    return op;
}

DenseOperator DenseOperator::operator*(const DenseOperator& rhs) const {
    if (dim != rhs.dim) {
        throw std::invalid_argument("dimension mismatch in dense multiply");
    }
    DenseOperator out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            const ComplexAmp lhs_ik = at(i, k);
            if (lhs_ik == ComplexAmp{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                out.at(i, j) += lhs_ik * rhs.at(k, j);
            }
        }
    }
    return out;
}

std::vector<ComplexAmp> DenseOperator::apply(std::span<const ComplexAmp> x) const {
    if (x.size() != dim) {
        throw std::invalid_argument("vector length does not match operator dimension");
    }
    std::vector<ComplexAmp> out(dim, ComplexAmp{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) {
        ComplexAmp acc{0.0, 0.0};
        for (std::size_t j = 0; j < dim; ++j) {
            acc += at(i, j) * x[j];
        }
        out[i] = acc;
    }
    return out;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out.at(i, j) = std::conj(at(j, i));
        }
    }
    return out;
}

double DenseOperator::max_abs_diff(const DenseOperator& other) const {
    if (dim != other.dim) {
        throw std::invalid_argument("dimension mismatch in max_abs_diff");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        worst = std::max(worst, std::abs(entries[i] - other.entries[i]));
    }
    return worst;
}

bool DenseOperator::is_unitary(double tol) const {
    return (adjoint() * *this).max_abs_diff(identity(dim)) <= tol;
}

}  // namespace qcirc
