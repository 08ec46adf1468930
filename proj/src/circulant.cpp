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

#include "qcirculant/circulant.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcirc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Unit root w^e with w = exp(2*pi*i/n); the exponent is reduced mod n so
// the angle stays small.
ComplexAmp unit_root(std::size_t n, std::size_t exponent) {
    return std::polar(1.0, kTwoPi * static_cast<double>(exponent % n) / static_cast<double>(n));
}

// In-place radix-2 transform, sign = -1 forward / +1 inverse (unscaled).
void fft_pow2(std::vector<ComplexAmp>& a, double sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; (j & bit) != 0; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = sign * kTwoPi / static_cast<double>(len);
        const ComplexAmp step = std::polar(1.0, angle);
        for (std::size_t base = 0; base < n; base += len) {
            ComplexAmp twiddle{1.0, 0.0};
            for (std::size_t off = 0; off < len / 2; ++off) {
                const ComplexAmp even = a[base + off];
                const ComplexAmp odd = a[base + off + len / 2] * twiddle;
                a[base + off] = even + odd;
                a[base + off + len / 2] = even - odd;
                twiddle *= step;
            }
        }
    }
}

// Direct O(n^2) transform for lengths that are not powers of two.
std::vector<ComplexAmp> dft_direct(std::span<const ComplexAmp> x, double sign) {
    const std::size_t n = x.size();
    std::vector<ComplexAmp> out(n, ComplexAmp{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) {
        ComplexAmp acc{0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m) {
            acc += x[m] * std::polar(1.0, sign * kTwoPi *
                                              static_cast<double>((m * k) % n) /
                                              static_cast<double>(n));
        }
        out[k] = acc;
    }
    return out;
}

std::vector<ComplexAmp> forward_dft(std::span<const ComplexAmp> x) {
    if (std::has_single_bit(x.size())) {
        std::vector<ComplexAmp> a(x.begin(), x.end());
        fft_pow2(a, -1.0);
        return a;
    }
    return dft_direct(x, -1.0);
}

std::vector<ComplexAmp> inverse_dft(std::span<const ComplexAmp> x) {
    std::vector<ComplexAmp> a;
    if (std::has_single_bit(x.size())) {
        a.assign(x.begin(), x.end());
        fft_pow2(a, +1.0);
    } else {
        a = dft_direct(x, +1.0);
    }
    const double scale = 1.0 / static_cast<double>(x.size());
    for (auto& v : a) {
        v *= scale;
    }
    return a;
}

}  // namespace

DenseOperator dense_circulant(const CirculantSpec& spec) {
    const std::size_t n = spec.size();
    if (n < 1) {
        throw std::invalid_argument("circulant needs at least one coefficient");
    }
    DenseOperator op(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            op.at(i, j) = spec.coeffs[(i + n - j) % n];
        }
    }
    return op;
}

DenseOperator dense_shift(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("shift operator needs n >= 2");
    }
    DenseOperator op(n);
    for (std::size_t j = 0; j < n; ++j) {
        op.at((j + 1) % n, j) = ComplexAmp{1.0, 0.0};
    }
    return op;
}

std::vector<ComplexAmp> eigenvalues(const CirculantSpec& spec) {
    const std::size_t n = spec.size();
    if (n < 1) {
        throw std::invalid_argument("circulant needs at least one coefficient");
    }
    std::vector<ComplexAmp> lambda(n, ComplexAmp{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        ComplexAmp acc = spec.coeffs[0];
        for (std::size_t k = 1; k < n; ++k) {
            acc += spec.coeffs[n - k] * unit_root(n, k * j);
        }
        lambda[j] = acc;
    }
    return lambda;
}

std::vector<ComplexAmp> eigenvector(std::size_t n, std::size_t j) {
    if (n < 1) {
        throw std::invalid_argument("eigenvector needs n >= 1");
    }
    if (j >= n) {
        throw std::out_of_range("eigenvector index out of range");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<ComplexAmp> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = scale * unit_root(n, k * j);
    }
    return v;
}

DenseOperator poly_reconstruct(const CirculantSpec& spec) {
    const std::size_t n = spec.size();
    if (n < 2) {
        throw std::invalid_argument("poly_reconstruct needs n >= 2");
    }
    const DenseOperator shift = dense_shift(n);
    DenseOperator power = DenseOperator::identity(n);
    DenseOperator acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        acc.at(i, i) = spec.coeffs[0];
    }
    for (std::size_t j = 1; j < n; ++j) {
        power = shift * power;
        for (std::size_t i = 0; i < acc.entries.size(); ++i) {
            acc.entries[i] += spec.coeffs[j] * power.entries[i];
        }
    }
    return acc;
}

std::vector<ComplexAmp> apply_circulant(const CirculantSpec& spec,
                                        std::span<const ComplexAmp> x) {
    const std::size_t n = spec.size();
    if (x.size() != n) {
        throw std::invalid_argument("input length does not match coefficient count");
    }
    if (n == 0) {
        throw std::invalid_argument("circulant needs at least one coefficient");
    }
    // Circular convolution: unscaled forward transforms, 1/n on the way back.
    // The scaling is pinned by the dense-oracle calibration test at n = 4.
    std::vector<ComplexAmp> fc = forward_dft(spec.coeffs);
    std::vector<ComplexAmp> fx = forward_dft(x);
    for (std::size_t k = 0; k < n; ++k) {
        fc[k] *= fx[k];
    }
    return inverse_dft(fc);
}

}  // namespace qcirc
