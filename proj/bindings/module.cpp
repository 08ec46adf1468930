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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcirculant/circulant.hpp"
#include "qcirculant/shift_circuits.hpp"
#include "qcirculant/simulator.hpp"
#include "qcirculant/sort_sim.hpp"
#include "qcirculant/string_pipeline.hpp"

namespace py = pybind11;

namespace {

using qcirc::ComplexAmp;

std::vector<std::vector<ComplexAmp>> to_nested(const qcirc::DenseOperator& op) {
    std::vector<std::vector<ComplexAmp>> rows(op.dim, std::vector<ComplexAmp>(op.dim));
    for (std::size_t i = 0; i < op.dim; ++i) {
        for (std::size_t j = 0; j < op.dim; ++j) {
            rows[i][j] = op.at(i, j);
        }
    }
    return rows;
}

qcirc::RotationDecoding decode_pipeline(const std::string& text, double boost) {
    const qcirc::EncodedString enc = qcirc::encode(text, boost);
    return qcirc::decode_blocks(qcirc::rotation_state(enc), enc);
}

}  // namespace

PYBIND11_MODULE(qcirculant, m) {
    m.doc() = "Cyclic-shift circuit simulation and Burrows-Wheeler string tools";

    py::class_<qcirc::EncodedString>(m, "Encoded")
        .def_readonly("text", &qcirc::EncodedString::text)
        .def_readonly("codes", &qcirc::EncodedString::codes)
        .def_readonly("n", &qcirc::EncodedString::n)
        .def_readonly("num_qubits", &qcirc::EncodedString::num_qubits)
        .def_readonly("boost", &qcirc::EncodedString::boost)
        .def_readonly("alphabet", &qcirc::EncodedString::alphabet_map)
        .def("sentinel_index", &qcirc::EncodedString::sentinel_index);

    m.def("encode", &qcirc::encode, py::arg("text"), py::arg("boost") = 1.0,
          "Pad to a power of two and assign amplitude codes.");

    m.def("bwt", [](const std::string& text) { return qcirc::bwt(text); }, py::arg("text"),
          "Burrows-Wheeler transform (last column of the sorted rotation matrix).");

    m.def("suffix_array",
          [](const std::string& text) { return qcirc::suffix_array(text); }, py::arg("text"),
          "Suffix starting positions in lexicographic order.");

    m.def(
        "rotations",
        [](const std::string& text, double boost) {
            const qcirc::RotationDecoding d = decode_pipeline(text, boost);
            return py::make_tuple(d.blocks, d.sentinel_pos);
        },
        py::arg("text"), py::arg("boost") = 1.0,
        "Simulate the rotation-superposition circuit and decode every cyclic shift; "
        "returns (blocks, sentinel_positions).");

    m.def(
        "quantum_bwt",
        [](const std::string& text, double boost) {
            return qcirc::bwt_from_rotations(decode_pipeline(text, boost));
        },
        py::arg("text"), py::arg("boost") = 1.0,
        "Burrows-Wheeler transform computed through the simulated circuit path.");

    m.def(
        "rotation_amplitudes",
        [](const std::string& text, double boost) {
            return qcirc::rotation_state(qcirc::encode(text, boost)).amps;
        },
        py::arg("text"), py::arg("boost") = 1.0,
        "Amplitudes of the 2q-qubit rotation-superposition state.");

    m.def(
        "sample_counts",
        [](const std::string& text, std::int64_t shots, std::uint64_t seed, double boost) {
            const qcirc::EncodedString enc = qcirc::encode(text, boost);
            return qcirc::sample(qcirc::rotation_state(enc), shots, seed).counts;
        },
        py::arg("text"), py::arg("shots"), py::arg("seed"), py::arg("boost") = 1.0,
        "Seeded measurement histogram keyed by (block, position).");

    m.def(
        "reconstruct_sentinel_order",
        [](const std::string& text, std::int64_t shots, std::uint64_t seed, double boost) {
            const qcirc::EncodedString enc = qcirc::encode(text, boost);
            const qcirc::SentinelRecovery r =
                qcirc::reconstruct_sentinels(qcirc::sample(qcirc::rotation_state(enc), shots, seed), enc);
            return py::make_tuple(r.positions, r.consistent);
        },
        py::arg("text"), py::arg("shots"), py::arg("seed"), py::arg("boost") = 1.0,
        "Per-block argmax sentinel positions and the cyclic-consistency flag.");

    m.def(
        "qft_matrix",
        [](int q) { return to_nested(qcirc::circuit_unitary(qcirc::qft_circuit(q))); },
        py::arg("num_qubits"), "Dense unitary of the Fourier-transform circuit.");

    m.def(
        "v_p_unitary",
        [](int q) { return to_nested(qcirc::circuit_unitary(qcirc::v_p_circuit(q))); },
        py::arg("main_qubits"), "Dense unitary of the simulated block-shift circuit.");

    m.def("v_p_dense", [](std::size_t n) { return to_nested(qcirc::v_p_dense(n)); },
          py::arg("n"), "Block-diagonal(P^0..P^{n-1}) reference permutation matrix.");

    m.def(
        "v_p_gate_budget",
        [](int q) {
            const qcirc::VpGateBudget b = qcirc::v_p_gate_budget(q);
            py::dict d;
            d["total_qubits"] = b.total_qubits;
            d["central_controlled_phase"] = b.central_controlled_phase;
            d["qft_hadamard"] = b.qft.hadamard;
            d["qft_controlled_phase"] = b.qft.controlled_phase;
            d["qft_swap"] = b.qft.swap;
            d["total_controlled_phase"] = b.total.controlled_phase;
            return d;
        },
        py::arg("main_qubits"), "Qubit and gate tallies of the block-shift circuit.");

    m.def(
        "eigenvalues",
        [](const std::vector<ComplexAmp>& coeffs) {
            return qcirc::eigenvalues(qcirc::CirculantSpec(coeffs));
        },
        py::arg("coeffs"), "Circulant eigenvalues paired with eigenvector(n, j).");

    m.def("eigenvector", &qcirc::eigenvector, py::arg("n"), py::arg("j"));

    m.def(
        "apply_circulant",
        [](const std::vector<ComplexAmp>& coeffs, const std::vector<ComplexAmp>& x) {
            return qcirc::apply_circulant(qcirc::CirculantSpec(coeffs), x);
        },
        py::arg("coeffs"), py::arg("x"),
        "Matrix-free circulant multiply via the Fourier diagonalization.");

    m.def(
        "dense_circulant",
        [](const std::vector<ComplexAmp>& coeffs) {
            return to_nested(qcirc::dense_circulant(qcirc::CirculantSpec(coeffs)));
        },
        py::arg("coeffs"), "Dense circulant matrix with coeffs as its first column.");

    m.def(
        "odd_even_sort",
        [](const std::vector<std::string>& keys) {
            std::vector<qcirc::SortableBlock> blocks(keys.size());
            for (std::size_t i = 0; i < keys.size(); ++i) {
                blocks[i] = qcirc::SortableBlock{keys[i], i};
            }
            blocks = qcirc::odd_even_sort(std::move(blocks));
            std::vector<std::string> sorted(blocks.size());
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                sorted[i] = blocks[i].key;
            }
            return sorted;
        },
        py::arg("keys"), "Odd-even transposition sort (pad < '$' < bytes order).");

    m.def(
        "bucket_hash",
        [](const std::string& key, int granularity) {
            return qcirc::bucket_hash(key, granularity);
        },
        py::arg("key"), py::arg("granularity"),
        "Order-preserving prefix hash (granularity in [1, 7]).");
}
