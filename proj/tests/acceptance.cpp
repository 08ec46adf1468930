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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcirculant/circulant.hpp"
#include "qcirculant/cli.hpp"
#include "qcirculant/shift_circuits.hpp"
#include "qcirculant/simulator.hpp"
#include "qcirculant/sort_sim.hpp"
#include "qcirculant/string_pipeline.hpp"
#include "test_helpers.hpp"

using namespace qcirc;

namespace {

int failures = 0;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    if (!pass) {
        ++failures;
    }
    std::printf("[%s] %02d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
}

// 1. bwt("banana$") == "annb$aa", under 10 ms.
void criterion_bwt_golden() {
    const auto start = std::chrono::steady_clock::now();
    const std::string result = bwt("banana$");
    const double elapsed = ms_since(start);
    const bool pass = result == "annb$aa" && elapsed < 10.0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "bwt(\"banana$\") = \"%s\", %.3f ms (limit 10 ms)",
                  result.c_str(), elapsed);
    report(1, "bwt-golden", pass, detail);
}

// 2. |circuit - dense| <= 1e-10 for q in {1,2,3}, under 5 s total.
void criterion_vp_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int q = 1; q <= 3; ++q) {
        worst = std::max(worst, circuit_unitary(v_p_circuit(q))
                                    .max_abs_diff(v_p_dense(std::size_t{1} << q)));
    }
    const double elapsed = ms_since(start);
    const bool pass = worst <= 1e-10 && elapsed < 5000.0;
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "max err %.3e (tol 1e-10) over q=1..3, %.1f ms (limit 5 s)", worst, elapsed);
    report(2, "vp-circuit-vs-dense", pass, detail);
}

// 3. Exactly 2q qubits and q^2 central controlled-phase gates, q = 1..6.
void criterion_gate_budget() {
    bool pass = true;
    for (int q = 1; q <= 6; ++q) {
        const VpGateBudget budget = v_p_gate_budget(q);
        const GateCounts recount = gate_counts(v_p_circuit(q));
        const std::int64_t central =
            recount.controlled_phase - 2 * gate_counts(qft_circuit(q)).controlled_phase;
        pass = pass && budget.total_qubits == 2 * q && v_p_circuit(q).num_qubits == 2 * q &&
               central == static_cast<std::int64_t>(q) * q &&
               budget.central_controlled_phase == central;
    }
    report(3, "qubit-and-gate-budget", pass,
           pass ? "2q qubits and q^2 central controlled-phase gates for q=1..6"
                : "budget mismatch");
}

// 4. Transform circuit vs the explicit DFT matrix, q <= 6, tol 1e-10.
void criterion_qft() {
    double worst = 0.0;
    for (int q = 1; q <= 6; ++q) {
        worst = std::max(worst, circuit_unitary(qft_circuit(q))
                                    .max_abs_diff(test_helpers::dft_matrix(std::size_t{1} << q)));
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max err %.3e (tol 1e-10) over q=1..6", worst);
    report(4, "qft-vs-dft", worst <= 1e-10, detail);
}

// 5. Polynomial reconstruction equals the dense circulant, tol 1e-12.
void criterion_poly_identity() {
    std::mt19937_64 rng(101);
    double worst = 0.0;
    for (const std::size_t n : {2, 4, 8, 16}) {
        for (int trial = 0; trial < 20; ++trial) {
            const CirculantSpec spec = test_helpers::random_spec(n, rng);
            worst = std::max(worst,
                             poly_reconstruct(spec).max_abs_diff(dense_circulant(spec)));
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max err %.3e (tol 1e-12), 20 specs per n in {2,4,8,16}",
                  worst);
    report(5, "polynomial-identity", worst <= 1e-12, detail);
}

// 6. C v_j = lambda_j v_j within 1e-10 on random specs, n <= 16.
void criterion_eigen_identity() {
    std::mt19937_64 rng(102);
    const std::size_t sizes[] = {2, 3, 4, 5, 8, 16};
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = sizes[trial % 6];
        const CirculantSpec spec = test_helpers::random_spec(n, rng);
        const DenseOperator c = dense_circulant(spec);
        const std::vector<ComplexAmp> lambda = eigenvalues(spec);
        for (std::size_t j = 0; j < n; ++j) {
            const std::vector<ComplexAmp> v = eigenvector(n, j);
            const std::vector<ComplexAmp> cv = c.apply(v);
            for (std::size_t k = 0; k < n; ++k) {
                worst = std::max(worst, std::abs(cv[k] - lambda[j] * v[k]));
            }
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max err %.3e (tol 1e-10), 20 specs, n <= 16", worst);
    report(6, "eigen-identity", worst <= 1e-10, detail);
}

// 7. Matrix-free multiply vs dense multiply, relative 1e-10, 50 cases.
void criterion_apply_circulant() {
    std::mt19937_64 rng(103);
    const std::size_t sizes[] = {3, 4, 7, 8, 16, 32};
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = sizes[trial % 6];
        const CirculantSpec spec = test_helpers::random_spec(n, rng);
        const std::vector<ComplexAmp> x = test_helpers::random_vector(n, rng);
        const std::vector<ComplexAmp> fast = apply_circulant(spec, x);
        const std::vector<ComplexAmp> dense = dense_circulant(spec).apply(x);
        double scale = 0.0;
        for (const auto& v : dense) {
            scale = std::max(scale, std::abs(v));
        }
        worst = std::max(worst, test_helpers::max_diff(fast, dense) / std::max(scale, 1.0));
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max rel err %.3e (tol 1e-10), 50 cases, n <= 32",
                  worst);
    report(7, "matrix-free-apply", worst <= 1e-10, detail);
}

// 8. Simulated-path BWT equals the classical transform on random texts.
void criterion_pipeline_equivalence() {
    std::mt19937_64 rng(104);
    const std::size_t lengths[] = {4, 8, 16};
    int mismatches = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::string text =
            test_helpers::random_sentinel_text(lengths[trial % 3], 4, rng);
        const EncodedString enc = encode(text);
        const RotationDecoding decoding = decode_blocks(rotation_state(enc), enc);
        if (bwt_from_rotations(decoding) != bwt(enc.text)) {
            ++mismatches;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail),
                  "%d/50 mismatches, lengths {4,8,16}, 4-letter alphabet", mismatches);
    report(8, "pipeline-equivalence", mismatches == 0, detail);
}

// 9. Sentinel order recovery from 20000 seeded shots, boost 4; the sentinel
// cell mass per block stays within 3 sigma of 16/33. Under 2 s.
void criterion_sampling_recovery() {
    const auto start = std::chrono::steady_clock::now();
    const EncodedString enc = encode("aab$", 4.0);
    const StateVector state = rotation_state(enc);
    const SampleHistogram hist = sample(state, 20000, 42);
    const SentinelRecovery recovery = reconstruct_sentinels(hist, enc);

    bool ratios_ok = true;
    const double p = 16.0 / 33.0;
    double worst_dev = 0.0;
    for (std::size_t block = 0; block < enc.n; ++block) {
        const std::size_t sentinel_cell = (enc.sentinel_index() + block) % enc.n;
        std::int64_t block_total = 0;
        std::int64_t sentinel_count = 0;
        for (std::size_t i = 0; i < enc.n; ++i) {
            const auto it = hist.counts.find({block, i});
            const std::int64_t count = it == hist.counts.end() ? 0 : it->second;
            block_total += count;
            if (i == sentinel_cell) {
                sentinel_count = count;
            }
        }
        const double ratio =
            static_cast<double>(sentinel_count) / static_cast<double>(block_total);
        const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(block_total));
        worst_dev = std::max(worst_dev, std::abs(ratio - p) / sigma);
        ratios_ok = ratios_ok && std::abs(ratio - p) <= 3.0 * sigma;
    }
    const double elapsed = ms_since(start);
    const bool order_ok =
        recovery.positions == std::vector<std::int64_t>{3, 0, 1, 2} && recovery.consistent;
    const bool pass = order_ok && ratios_ok && elapsed < 2000.0;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "positions (%lld,%lld,%lld,%lld), worst dev %.2f sigma (limit 3), %.1f ms "
                  "(limit 2 s)",
                  static_cast<long long>(recovery.positions[0]),
                  static_cast<long long>(recovery.positions[1]),
                  static_cast<long long>(recovery.positions[2]),
                  static_cast<long long>(recovery.positions[3]), worst_dev, elapsed);
    report(9, "sampling-order-recovery", pass, detail);
}

// 10. Transposition sort equals the comparison sort on 200 batches and
// reproduces the sorted rotation matrix of "aab$".
void criterion_sort() {
    std::mt19937_64 rng(105);
    int mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t count = 1 + rng() % 64;
        std::vector<SortableBlock> blocks(count);
        for (std::size_t i = 0; i < count; ++i) {
            std::string key(4, 'a');
            for (auto& c : key) {
                c = static_cast<char>('a' + rng() % 4);
            }
            blocks[i] = SortableBlock{std::move(key), i};
        }
        std::vector<SortableBlock> expected = blocks;
        std::stable_sort(expected.begin(), expected.end(),
                         [](const SortableBlock& a, const SortableBlock& b) {
                             return rank_less(a.key, b.key);
                         });
        if (odd_even_sort(blocks) != expected) {
            ++mismatches;
        }
    }

    const EncodedString enc = encode("aab$");
    std::vector<SortableBlock> rotations(enc.n);
    for (std::size_t j = 0; j < enc.n; ++j) {
        std::string rotation(enc.n, '\0');
        for (std::size_t i = 0; i < enc.n; ++i) {
            rotation[i] = enc.text[(i + enc.n - j) % enc.n];
        }
        rotations[j] = SortableBlock{std::move(rotation), j};
    }
    std::string last_column;
    for (const auto& block : odd_even_sort(rotations)) {
        last_column.push_back(block.key.back());
    }

    const bool pass = mismatches == 0 && last_column == "b$aa";
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d/200 batch mismatches, last column \"%s\"",
                  mismatches, last_column.c_str());
    report(10, "odd-even-sort", pass, detail);
}

// 11. `verify --n 8` twice: exit 0 both times, byte-identical output.
void criterion_verify_determinism() {
    std::ostringstream out1, err1, out2, err2;
    const int status1 = run_cli({"verify", "--n", "8"}, out1, err1);
    const int status2 = run_cli({"verify", "--n", "8"}, out2, err2);
    const bool pass = status1 == 0 && status2 == 0 && out1.str() == out2.str();
    char detail[96];
    std::snprintf(detail, sizeof(detail), "exit %d/%d, outputs %s", status1, status2,
                  out1.str() == out2.str() ? "identical" : "DIFFER");
    report(11, "verify-determinism", pass, detail);
}

}  // namespace

int main() {
    criterion_bwt_golden();
    criterion_vp_equivalence();
    criterion_gate_budget();
    criterion_qft();
    criterion_poly_identity();
    criterion_eigen_identity();
    criterion_apply_circulant();
    criterion_pipeline_equivalence();
    criterion_sampling_recovery();
    criterion_sort();
    criterion_verify_determinism();

    if (failures == 0) {
        std::printf("ALL 11 CRITERIA PASSED\n");
    } else {
        std::printf("%d CRITERIA FAILED\n", failures);
    }
    return failures;
}
