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

#include "qcirculant/string_pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qcirculant/shift_circuits.hpp"
#include "qcirculant/simulator.hpp"

namespace qcirc {

namespace {

// Main + ancilla register cap for the simulated pipeline (2^20 amplitudes).
constexpr int kPipelineQubitCap = 20;

void require_single_sentinel(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("text is empty");
    }
    if (std::count(text.begin(), text.end(), kSentinel) != 1) {
        throw std::invalid_argument("text must contain exactly one sentinel '$'");
    }
}

bool cyclic_rank_less(std::string_view text, std::size_t a, std::size_t b) {
    const std::size_t n = text.size();
    for (std::size_t t = 0; t < n; ++t) {
        const int ra = char_rank(text[(a + t) % n]);
        const int rb = char_rank(text[(b + t) % n]);
        if (ra != rb) {
            return ra < rb;
        }
    }
    return false;
}

}  // namespace

int char_rank(char c) {
    if (c == kPad) {
        return 0;
    }
    if (c == kSentinel) {
        return 1;
    }
    return 2 + static_cast<int>(static_cast<unsigned char>(c));
}

bool rank_less(std::string_view a, std::string_view b) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        const int ra = char_rank(a[i]);
        const int rb = char_rank(b[i]);
        if (ra != rb) {
            return ra < rb;
        }
    }
    return a.size() < b.size();
}

double EncodedString::code_norm() const {
    double sum = 0.0;
    for (double c : codes) {
        sum += c * c;
    }
    return std::sqrt(sum);
}

std::size_t EncodedString::sentinel_index() const {
    return text.find(kSentinel);
}

StateVector EncodedString::state() const {
    const double scale = 1.0 / code_norm();
    std::vector<ComplexAmp> amps(n);
    for (std::size_t i = 0; i < n; ++i) {
        amps[i] = ComplexAmp{codes[i] * scale, 0.0};
    }
    return StateVector(num_qubits, std::move(amps));
}

EncodedString encode(std::string_view text, double boost) {
    if (text.size() < 2) {
        throw std::invalid_argument("text must have at least two characters");
    }
    require_single_sentinel(text);
    if (!std::isfinite(boost) || boost < 1.0) {
        throw std::invalid_argument("boost must be a finite real >= 1");
    }
    std::vector<char> alphabet;
    for (char c : text) {
        if (static_cast<unsigned char>(c) >= 0x80) {
            throw std::invalid_argument("text must be single-byte characters");
        }
        if (c == kPad) {
            throw std::invalid_argument("text may not contain the reserved pad character '#'");
        }
        if (c != kSentinel) {
            alphabet.push_back(c);
        }
    }
    std::sort(alphabet.begin(), alphabet.end(),
              [](char a, char b) { return char_rank(a) < char_rank(b); });
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    EncodedString enc;
    enc.boost = boost;
    enc.alphabet_map[kSentinel] = boost;
    double next_code = 2.0;
    for (char c : alphabet) {
        if (boost == next_code) {
            throw std::invalid_argument("boost collides with an alphabet code");
        }
        enc.alphabet_map[c] = next_code;
        next_code += 1.0;
    }

    enc.n = std::bit_ceil(text.size());
    enc.num_qubits = std::countr_zero(enc.n);
    enc.text.assign(text);
    if (enc.n > text.size()) {
        enc.text.append(enc.n - text.size(), kPad);
        enc.alphabet_map[kPad] = 0.0;
    }
    enc.codes.reserve(enc.n);
    for (char c : enc.text) {
        enc.codes.push_back(enc.alphabet_map.at(c));
    }
    return enc;
}

StateVector rotation_state_from_codes(std::span<const double> codes) {
    const std::size_t n = codes.size();
    if (!std::has_single_bit(n) || n < 2) {
        throw std::invalid_argument("code vector length must be a power of two >= 2");
    }
    const int q = std::countr_zero(n);
    if (2 * q > kPipelineQubitCap) {
        throw std::invalid_argument("rotation state exceeds the simulated qubit cap");
    }
    double norm_sq = 0.0;
    for (double c : codes) {
        norm_sq += c * c;
    }
    const double scale = 1.0 / std::sqrt(norm_sq * static_cast<double>(n));
    std::vector<ComplexAmp> amps(n * n);
    for (std::size_t block = 0; block < n; ++block) {
        for (std::size_t i = 0; i < n; ++i) {
            // Block j carries the code vector shifted down by j.
            amps[block * n + i] = ComplexAmp{codes[(i + n - block) % n] * scale, 0.0};
        }
    }
    return StateVector(2 * q, std::move(amps));
}

StateVector rotation_state_dense(const EncodedString& enc) {
    return rotation_state_from_codes(enc.codes);
}

StateVector rotation_state(const EncodedString& enc) {
    const int q = enc.num_qubits;
    if (2 * q > kPipelineQubitCap) {
        throw std::invalid_argument("rotation state exceeds the simulated qubit cap");
    }
    // |0>_ancilla (x) |codes>_main, then Hadamards on the ancilla register
    // and the block-shift circuit.
    const StateVector main = enc.state();
    std::vector<ComplexAmp> amps(enc.n * enc.n, ComplexAmp{0.0, 0.0});
    std::copy(main.amps.begin(), main.amps.end(), amps.begin());
    StateVector state(2 * q, std::move(amps));
    for (int k = 0; k < q; ++k) {
        state = apply_gate(state, Gate::hadamard(q + k));
    }
    return run_circuit(state, v_p_circuit(q));
}

RotationDecoding decode_blocks(const StateVector& state, const EncodedString& enc) {
    const std::size_t n = enc.n;
    if (state.num_qubits != 2 * enc.num_qubits) {
        throw std::invalid_argument("state qubit count does not match the encoding");
    }

    // Remove the global phase: rotate the largest amplitude onto the
    // positive real axis.
    std::size_t argmax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        if (std::abs(state.amps[i]) > best) {
            best = std::abs(state.amps[i]);
            argmax = i;
        }
    }
    const ComplexAmp phase =
        best > 0.0 ? state.amps[argmax] / best : ComplexAmp{1.0, 0.0};

    std::vector<double> values(state.amps.size());
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        const ComplexAmp a = state.amps[i] * std::conj(phase);
        if (std::abs(a.imag()) > 1e-8 || a.real() < -1e-8) {
            throw std::runtime_error(
                "state is not real-nonnegative up to a global phase; cannot decode");
        }
        values[i] = a.real();
    }

    // code -> character, sorted by code value for nearest-match scans.
    std::vector<std::pair<double, char>> code_table;
    for (const auto& [ch, code] : enc.alphabet_map) {
        code_table.emplace_back(code, ch);
    }
    std::sort(code_table.begin(), code_table.end());

    const double scale = std::sqrt(static_cast<double>(n)) * enc.code_norm();
    RotationDecoding decoding;
    decoding.blocks.assign(n, std::string());
    decoding.sentinel_pos.assign(n, -1);
    for (std::size_t block = 0; block < n; ++block) {
        std::string& out = decoding.blocks[block];
        out.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double value = values[block * n + i] * scale;
            double best_dist = std::numeric_limits<double>::infinity();
            double second_dist = std::numeric_limits<double>::infinity();
            char best_char = '\0';
            for (const auto& [code, ch] : code_table) {
                const double dist = std::abs(value - code);
                if (dist < best_dist) {
                    second_dist = best_dist;
                    best_dist = dist;
                    best_char = ch;
                } else if (dist < second_dist) {
                    second_dist = dist;
                }
            }
            if (best_dist > 1e-6) {
                throw std::runtime_error("amplitude does not match any code within tolerance");
            }
            if (second_dist <= 1e-6) {
                throw std::runtime_error("amplitude is ambiguous between two codes");
            }
            out[i] = best_char;
        }
        const std::size_t pos = out.find(kSentinel);
        if (pos == std::string::npos || out.find(kSentinel, pos + 1) != std::string::npos) {
            throw std::runtime_error("decoded block does not contain exactly one sentinel");
        }
        decoding.sentinel_pos[block] = static_cast<int>(pos);
    }
    return decoding;
}

std::string bwt(std::string_view text) {
    require_single_sentinel(text);
    const std::size_t n = text.size();
    std::vector<std::size_t> rotation(n);
    std::iota(rotation.begin(), rotation.end(), std::size_t{0});
    std::sort(rotation.begin(), rotation.end(),
              [text](std::size_t a, std::size_t b) { return cyclic_rank_less(text, a, b); });
    std::string last(n, '\0');
    for (std::size_t k = 0; k < n; ++k) {
        last[k] = text[(rotation[k] + n - 1) % n];
    }
    return last;
}

std::vector<std::size_t> suffix_array(std::string_view text) {
    require_single_sentinel(text);
    std::vector<std::size_t> order(text.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [text](std::size_t a, std::size_t b) {
        return rank_less(text.substr(a), text.substr(b));
    });
    return order;
}

std::string bwt_from_rotations(const RotationDecoding& decoding) {
    std::vector<std::string> sorted = decoding.blocks;
    std::sort(sorted.begin(), sorted.end(),
              [](const std::string& a, const std::string& b) { return rank_less(a, b); });
    std::string last;
    last.reserve(sorted.size());
    for (const auto& row : sorted) {
        last.push_back(row.back());
    }
    return last;
}

SampleHistogram sample(const StateVector& state, std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (state.num_qubits % 2 != 0) {
        throw std::invalid_argument("sampling expects an even qubit count (block layout)");
    }
    const int main_qubits = state.num_qubits / 2;
    const std::size_t n = std::size_t{1} << main_qubits;

    std::vector<double> cdf(state.amps.size());
    double total = 0.0;
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        total += std::norm(state.amps[i]);
        cdf[i] = total;
    }
    if (total <= 0.0) {
        throw std::invalid_argument("state has zero norm");
    }

    SampleHistogram hist;
    hist.shots = shots;
    hist.seed = seed;
    hist.main_qubits = main_qubits;
    std::mt19937_64 rng(seed);
    for (std::int64_t s = 0; s < shots; ++s) {
        // 53-bit uniform in [0, 1); avoids the library distributions so the
        // stream is identical everywhere.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u * total);
        const std::size_t index =
            it == cdf.end() ? cdf.size() - 1
                            : static_cast<std::size_t>(std::distance(cdf.begin(), it));
        ++hist.counts[{index / n, index % n}];
    }
    return hist;
}

SentinelRecovery reconstruct_sentinels(const SampleHistogram& hist, const EncodedString& enc) {
    if (hist.shots < 1 || hist.counts.empty()) {
        throw std::invalid_argument("histogram is empty");
    }
    const std::size_t n = enc.n;
    SentinelRecovery recovery;
    recovery.positions.assign(n, -1);
    std::vector<std::int64_t> best(n, 0);
    for (const auto& [key, count] : hist.counts) {
        const auto& [block, position] = key;
        if (block >= n || position >= n) {
            throw std::invalid_argument("histogram outcome outside the encoded range");
        }
        // Ordered map iteration makes ties resolve to the smallest position.
        if (count > best[block]) {
            best[block] = count;
            recovery.positions[block] = static_cast<std::int64_t>(position);
        }
    }
    recovery.consistent = recovery.positions[0] >= 0;
    for (std::size_t j = 0; j < n && recovery.consistent; ++j) {
        recovery.consistent =
            recovery.positions[j] ==
            (recovery.positions[0] + static_cast<std::int64_t>(j)) % static_cast<std::int64_t>(n);
    }
    return recovery;
}

}  // namespace qcirc
