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

#ifndef QCIRCULANT_STRING_PIPELINE_HPP_
#define QCIRCULANT_STRING_PIPELINE_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcirculant/state_vector.hpp"

namespace qcirc {

/// End-of-string marker; sorts below every alphabet character.
inline constexpr char kSentinel = '$';
/// Padding character used to reach a power-of-two length; sorts below the
/// sentinel and is rejected in input text.
inline constexpr char kPad = '#';

/// Character order shared by every sort in this module:
/// pad < sentinel < all other bytes in ascending byte order.
int char_rank(char c);
bool rank_less(std::string_view a, std::string_view b);

/// A string prepared for amplitude encoding. The pad character carries
/// code 0, the sentinel carries 1 * boost, and the remaining distinct
/// characters carry 2, 3, ... in ascending byte order.
struct EncodedString {
    std::string text;           // padded to length n, exactly one sentinel
    std::vector<double> codes;  // one code per character of text
    std::size_t n = 0;          // padded length, a power of two
    int num_qubits = 0;         // log2(n), main-register width
    double boost = 1.0;
    std::map<char, double> alphabet_map;  // character -> code

    double code_norm() const;
    std::size_t sentinel_index() const;
    /// codes / ||codes|| as a num_qubits state.
    StateVector state() const;
};

/// Validates the text (length >= 2, exactly one '$', single-byte characters,
/// no pad character), assigns codes, pads to the next power of two.
/// boost >= 1 scales the sentinel code; a boost that collides with an
/// alphabet code is rejected so decoding stays unambiguous.
EncodedString encode(std::string_view text, double boost = 1.0);

/// All n cyclic rotations recovered from a rotation-superposition state.
/// blocks[j] is text shifted down by j: blocks[j][i] = text[(i - j) mod n];
/// sentinel_pos[j] = (sentinel_pos[0] + j) mod n.
struct RotationDecoding {
    std::vector<std::string> blocks;
    std::vector<int> sentinel_pos;
};

/// 2q-qubit state holding every cyclic rotation of the encoded string in
/// superposition: ancilla block j equals (1/sqrt(n)) * shift-down-by-j of
/// the normalized code vector. Computed through the simulated block-shift
/// circuit. Throws above 2q = 20 qubits.
StateVector rotation_state(const EncodedString& enc);

/// Same state computed by the dense permutation action instead of the
/// circuit; the two paths agree to simulation accuracy.
StateVector rotation_state_dense(const EncodedString& enc);

/// Dense-path rotation state over raw positive codes (power-of-two length).
/// Exists so the permutation action can be checked without an encoding.
StateVector rotation_state_from_codes(std::span<const double> codes);

/// Inverts the encoding block by block: each amplitude is scaled by
/// sqrt(n) * ||codes|| and matched to the nearest code. Throws if the state
/// is not real-nonnegative up to global phase within 1e-8, or if any scaled
/// amplitude is farther than 1e-6 from every code (or ties two codes).
RotationDecoding decode_blocks(const StateVector& state, const EncodedString& enc);

/// Burrows-Wheeler transform: last column of the lexicographically sorted
/// matrix of all cyclic rotations. Requires exactly one sentinel.
std::string bwt(std::string_view text);

/// Starting positions of the suffixes in lexicographic order (brute-force
/// comparison sort). Requires exactly one sentinel.
std::vector<std::size_t> suffix_array(std::string_view text);

/// Sorts the decoded rotations and returns the last column; equals
/// bwt(enc.text) for states produced by this pipeline.
std::string bwt_from_rotations(const RotationDecoding& decoding);

/// Measurement outcomes over a 2q-qubit state, keyed by
/// (ancilla block j, in-block position i).
struct SampleHistogram {
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
    int main_qubits = 0;  // positions run over 2^main_qubits cells
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> counts;
};

/// Draws `shots` outcomes with probability |amplitude|^2 using an explicit
/// inverse-CDF over a seeded mt19937_64, so results depend only on
/// (state, shots, seed). Requires shots >= 1 and an even qubit count.
SampleHistogram sample(const StateVector& state, std::int64_t shots, std::uint64_t seed);

/// Per-block argmax sentinel estimate from a histogram. positions[j] is the
/// most frequent cell of block j, or -1 if the block received no samples;
/// consistent reports whether every block is determined and the positions
/// satisfy pos[j] = (pos[0] + j) mod n.
struct SentinelRecovery {
    std::vector<std::int64_t> positions;
    bool consistent = false;
};

SentinelRecovery reconstruct_sentinels(const SampleHistogram& hist, const EncodedString& enc);

}  // namespace qcirc

#endif  // QCIRCULANT_STRING_PIPELINE_HPP_
