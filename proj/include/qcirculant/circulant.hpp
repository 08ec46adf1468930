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

#ifndef QCIRCULANT_CIRCULANT_HPP_
#define QCIRCULANT_CIRCULANT_HPP_

#include <span>
#include <vector>

#include "qcirculant/dense_operator.hpp"
#include "qcirculant/state_vector.hpp"

namespace qcirc {

/// Coefficients of a circulant matrix. coeffs is the FIRST COLUMN of C:
/// entry (i, j) of the dense matrix is coeffs[(i - j) mod n].
struct CirculantSpec {
    std::vector<ComplexAmp> coeffs;

    CirculantSpec() = default;
    explicit CirculantSpec(std::vector<ComplexAmp> c) : coeffs(std::move(c)) {}

    std::size_t size() const { return coeffs.size(); }
};

/// Dense n x n circulant with entry (i, j) = coeffs[(i - j) mod n].
DenseOperator dense_circulant(const CirculantSpec& spec);

/// Cyclic shift-down permutation: P maps e_j to e_{(j+1) mod n}.
/// Requires n >= 2.
DenseOperator dense_shift(std::size_t n);

/// Eigenvalues of the circulant, index j:
///   lambda_j = c_0 + c_{n-1} w^j + c_{n-2} w^{2j} + ... + c_1 w^{(n-1)j},
/// with w = exp(2*pi*i/n). Pairs with eigenvector(n, j).
std::vector<ComplexAmp> eigenvalues(const CirculantSpec& spec);

/// (1/sqrt(n)) * (1, w^j, w^{2j}, ..., w^{(n-1)j}).
std::vector<ComplexAmp> eigenvector(std::size_t n, std::size_t j);

/// Reconstructs the circulant as sum_j coeffs[j] * P^j by repeated dense
/// multiplication. Requires n >= 2.
DenseOperator poly_reconstruct(const CirculantSpec& spec);

/// Matrix-free circulant multiply via the Fourier diagonalization:
/// inverse transform of (transform(coeffs) .* transform(x)). Power-of-two
/// lengths use the radix-2 transform; any other length falls back to the
/// direct O(n^2) DFT. Agrees with dense_circulant(spec).apply(x).
std::vector<ComplexAmp> apply_circulant(const CirculantSpec& spec,
                                        std::span<const ComplexAmp> x);

}  // namespace qcirc

#endif  // QCIRCULANT_CIRCULANT_HPP_
