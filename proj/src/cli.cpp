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

#include "qcirculant/cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcirculant/circulant.hpp"
#include "qcirculant/serialization.hpp"
#include "qcirculant/shift_circuits.hpp"
#include "qcirculant/simulator.hpp"
#include "qcirculant/sort_sim.hpp"
#include "qcirculant/string_pipeline.hpp"

namespace qcirc {

namespace {

using nlohmann::json;

// All free-form numeric output goes through here: 12 significant digits.
std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_complex(const ComplexAmp& a) {
    return "[" + fmt_g(a.real()) + ", " + fmt_g(a.imag()) + "]";
}

void print_state(const StateVector& state, std::ostream& out) {
    out << "num_qubits: " << state.num_qubits << "\n";
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        out << i << ": " << fmt_complex(state.amps[i]) << "\n";
    }
}

double uniform_pm1(std::mt19937_64& rng) {
    return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
}

CirculantSpec random_spec(std::size_t n, std::mt19937_64& rng) {
    CirculantSpec spec;
    spec.coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        spec.coeffs.emplace_back(uniform_pm1(rng), uniform_pm1(rng));
    }
    return spec;
}

std::string random_sentinel_text(std::size_t n, std::mt19937_64& rng) {
    std::string text(n, 'a');
    for (std::size_t i = 0; i + 1 < n; ++i) {
        text[i] = static_cast<char>('a' + rng() % 4);
    }
    text[n - 1] = kSentinel;
    return text;
}

// Normalized DFT matrix built straight from the formula; the reference side
// of the transform check.
DenseOperator dft_matrix(std::size_t n) {
    DenseOperator f(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            f.at(j, k) = std::polar(scale, 2.0 * std::numbers::pi *
                                               static_cast<double>((j * k) % n) /
                                               static_cast<double>(n));
        }
    }
    return f;
}

struct VerifyReport {
    bool all_passed = true;

    void line(std::ostream& out, const std::string& name, const std::string& detail,
              bool passed) {
        all_passed = all_passed && passed;
        out << (passed ? "PASS" : "FAIL") << "  " << name << "  " << detail << "\n";
    }
};

int run_verify(std::size_t n, std::uint64_t seed, std::ostream& out) {
    if (!std::has_single_bit(n) || n < 2 || n > 32) {
        throw std::invalid_argument("--n must be a power of two in [2, 32]");
    }
    const int q_max = std::countr_zero(n);
    VerifyReport report;

    for (int q = 1; q <= q_max; ++q) {
        const double err = circuit_unitary(qft_circuit(q)).max_abs_diff(
            dft_matrix(std::size_t{1} << q));
        report.line(out, "qft-vs-dft", "q=" + std::to_string(q) + " max_err=" + fmt_g(err),
                    err <= 1e-10);
    }
    for (int q = 1; q <= std::min(q_max, 5); ++q) {
        const double err =
            circuit_unitary(v_p_circuit(q)).max_abs_diff(v_p_dense(std::size_t{1} << q));
        report.line(out, "vp-circuit-vs-dense",
                    "q=" + std::to_string(q) + " max_err=" + fmt_g(err), err <= 1e-10);
    }

    std::mt19937_64 rng(seed);
    double poly_err = 0.0;
    for (int i = 0; i < 20; ++i) {
        const CirculantSpec spec = random_spec(n, rng);
        poly_err = std::max(poly_err,
                            poly_reconstruct(spec).max_abs_diff(dense_circulant(spec)));
    }
    report.line(out, "poly-identity",
                "n=" + std::to_string(n) + " cases=20 max_err=" + fmt_g(poly_err),
                poly_err <= 1e-12);

    bool pipeline_ok = true;
    for (int i = 0; i < 20; ++i) {
        const std::string text = random_sentinel_text(n, rng);
        const EncodedString enc = encode(text);
        const RotationDecoding decoding = decode_blocks(rotation_state(enc), enc);
        if (bwt_from_rotations(decoding) != bwt(enc.text)) {
            pipeline_ok = false;
        }
    }
    report.line(out, "pipeline-bwt", "n=" + std::to_string(n) + " cases=20",
                pipeline_ok);

    out << (report.all_passed ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    return report.all_passed ? 0 : 1;
}

void setup_bwt(CLI::App& app, std::ostream& out) {
    auto* cmd = app.add_subcommand("bwt", "Burrows-Wheeler transform of a '$'-terminated string");
    auto text = std::make_shared<std::string>();
    cmd->add_option("text", *text, "input string containing exactly one '$'")->required();
    cmd->callback([&out, text] { out << bwt(*text) << "\n"; });
}

void setup_suffix_array(CLI::App& app, std::ostream& out) {
    auto* cmd = app.add_subcommand("suffix-array", "suffix starting positions in sorted order");
    auto text = std::make_shared<std::string>();
    cmd->add_option("text", *text, "input string containing exactly one '$'")->required();
    cmd->callback([&out, text] {
        const auto order = suffix_array(*text);
        for (std::size_t i = 0; i < order.size(); ++i) {
            out << (i > 0 ? " " : "") << order[i];
        }
        out << "\n";
    });
}

void setup_rotations(CLI::App& app, std::ostream& out) {
    auto* cmd = app.add_subcommand(
        "rotations", "simulate the rotation-superposition state and decode every block");
    auto text = std::make_shared<std::string>();
    auto boost = std::make_shared<double>(1.0);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("text", *text, "input string containing exactly one '$'")->required();
    cmd->add_option("--boost", *boost, "sentinel code multiplier (>= 1)");
    cmd->add_flag("--json", *as_json, "emit JSON");
    cmd->callback([&out, text, boost, as_json] {
        const EncodedString enc = encode(*text, *boost);
        const StateVector state = rotation_state(enc);
        const RotationDecoding decoding = decode_blocks(state, enc);
        if (*as_json) {
            json j = decoding_to_json(decoding);
            j["text"] = enc.text;
            j["n"] = enc.n;
            j["boost"] = enc.boost;
            j["state"] = state_to_json(state);
            out << j.dump(2) << "\n";
            return;
        }
        out << "text: " << enc.text << "\n";
        out << "n: " << enc.n << "\n";
        for (std::size_t jdx = 0; jdx < enc.n; ++jdx) {
            out << "block " << jdx << ": " << decoding.blocks[jdx]
                << " sentinel=" << decoding.sentinel_pos[jdx] << "\n";
        }
    });
}

void setup_sample(CLI::App& app, std::ostream& out, std::ostream& err, int& sample_status) {
    auto* cmd = app.add_subcommand(
        "sample", "measure the rotation state and reconstruct the sentinel order");
    auto text = std::make_shared<std::string>();
    auto boost = std::make_shared<double>(1.0);
    auto shots = std::make_shared<std::int64_t>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("text", *text, "input string containing exactly one '$'")->required();
    cmd->add_option("--shots", *shots, "number of measurements (>= 1)")->required();
    cmd->add_option("--seed", *seed, "random seed (required: runs are reproducible)")
        ->required();
    cmd->add_option("--boost", *boost, "sentinel code multiplier (>= 1)");
    cmd->add_flag("--json", *as_json, "emit JSON");
    cmd->callback([&out, &err, &sample_status, text, boost, shots, seed, as_json] {
        const EncodedString enc = encode(*text, *boost);
        const SampleHistogram hist = sample(rotation_state(enc), *shots, *seed);
        const SentinelRecovery recovery = reconstruct_sentinels(hist, enc);
        if (*as_json) {
            json j = histogram_to_json(hist);
            j["sentinel_positions"] = recovery.positions;
            j["consistent"] = recovery.consistent;
            out << j.dump(2) << "\n";
        } else {
            for (const auto& [key, count] : hist.counts) {
                out << key.first << " " << key.second << " " << count << "\n";
            }
            out << "sentinel_positions:";
            for (const auto pos : recovery.positions) {
                out << " " << pos;
            }
            out << "\n";
            out << "consistent: " << (recovery.consistent ? "true" : "false") << "\n";
        }
        if (!recovery.consistent) {
            err << "sentinel order reconstruction is inconsistent; increase --shots or --boost\n";
            sample_status = 1;
        }
    });
}

void setup_sort_rotations(CLI::App& app, std::ostream& out) {
    auto* cmd = app.add_subcommand(
        "sort-rotations", "odd-even transposition rounds over the cyclic rotations");
    auto text = std::make_shared<std::string>();
    auto rounds = std::make_shared<std::int64_t>(-1);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("text", *text, "input string containing exactly one '$'")->required();
    cmd->add_option("--rounds", *rounds, "number of rounds (default: one per block)");
    cmd->add_flag("--json", *as_json, "emit JSON only");
    cmd->callback([&out, text, rounds, as_json] {
        const EncodedString enc = encode(*text);
        const std::size_t n = enc.n;
        std::vector<SortableBlock> blocks(n);
        for (std::size_t j = 0; j < n; ++j) {
            std::string rotation(n, '\0');
            for (std::size_t i = 0; i < n; ++i) {
                rotation[i] = enc.text[(i + n - j) % n];
            }
            blocks[j] = SortableBlock{std::move(rotation), j};
        }
        const std::size_t total =
            *rounds < 0 ? n : static_cast<std::size_t>(*rounds);
        json snapshots = json::array();
        for (std::size_t r = 0; r < total; ++r) {
            const RoundPhase phase = r % 2 == 0 ? RoundPhase::Even : RoundPhase::Odd;
            blocks = compare_exchange_round(std::move(blocks), phase);
            if (!*as_json) {
                out << "round " << r << (phase == RoundPhase::Even ? " (even):" : " (odd):");
                for (const auto& b : blocks) {
                    out << " " << b.key;
                }
                out << "\n";
            } else {
                json snap = json::array();
                for (const auto& b : blocks) {
                    snap.push_back(b.key);
                }
                snapshots.push_back(std::move(snap));
            }
        }
        json final_order{{"order", json::array()}, {"keys", json::array()}};
        for (const auto& b : blocks) {
            final_order["order"].push_back(b.payload);
            final_order["keys"].push_back(b.key);
        }
        if (*as_json) {
            final_order["rounds"] = std::move(snapshots);
            out << final_order.dump(2) << "\n";
        } else {
            out << final_order.dump(2) << "\n";
        }
    });
}

void setup_gates(CLI::App& app, std::ostream& out) {
    auto* cmd = app.add_subcommand("gates", "qubit and gate budget of the block-shift circuit");
    auto qubits = std::make_shared<int>(0);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--qubits", *qubits, "main-register qubit count q (>= 1)")->required();
    cmd->add_flag("--json", *as_json, "emit JSON");
    cmd->callback([&out, qubits, as_json] {
        const VpGateBudget budget = v_p_gate_budget(*qubits);
        if (*as_json) {
            out << budget_to_json(budget).dump(2) << "\n";
            return;
        }
        out << "total qubits:             " << budget.total_qubits << "\n";
        out << "central controlled-phase: " << budget.central_controlled_phase << "\n";
        out << "per transform:            hadamard=" << budget.qft.hadamard
            << " controlled_phase=" << budget.qft.controlled_phase
            << " swap=" << budget.qft.swap << "\n";
        out << "full circuit:             hadamard=" << budget.total.hadamard
            << " phase=" << budget.total.phase
            << " controlled_phase=" << budget.total.controlled_phase
            << " swap=" << budget.total.swap << "\n";
    });
}

void setup_simulate_vp(CLI::App& app, std::ostream& out) {
    auto* cmd = app.add_subcommand(
        "simulate-vp", "build the block-shift circuit; print its gates, unitary, or action");
    auto qubits = std::make_shared<int>(0);
    auto text = std::make_shared<std::string>();
    auto boost = std::make_shared<double>(1.0);
    auto input = std::make_shared<std::string>();
    auto unitary = std::make_shared<bool>(false);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--qubits", *qubits, "main-register qubit count q");
    cmd->add_option("--text", *text, "run the full rotation pipeline on this string");
    cmd->add_option("--boost", *boost, "sentinel code multiplier for --text");
    cmd->add_option("--input", *input, "JSON state file (2q qubits) to run the circuit on");
    cmd->add_flag("--unitary", *unitary, "print the dense unitary (2q <= 10)");
    cmd->add_flag("--json", *as_json, "emit JSON");
    cmd->callback([&out, qubits, text, boost, input, unitary, as_json] {
        if (!text->empty()) {
            const EncodedString enc = encode(*text, *boost);
            const StateVector state = rotation_state(enc);
            if (*as_json) {
                out << state_to_json(state).dump(2) << "\n";
            } else {
                print_state(state, out);
            }
            return;
        }
        if (*qubits < 1) {
            throw std::invalid_argument("simulate-vp needs --qubits (or --text)");
        }
        if (!input->empty()) {
            std::ifstream stream(*input);
            if (!stream) {
                throw std::invalid_argument("cannot open state file: " + *input);
            }
            json j;
            stream >> j;
            const StateVector state = run_circuit(state_from_json(j), v_p_circuit(*qubits));
            if (*as_json) {
                out << state_to_json(state).dump(2) << "\n";
            } else {
                print_state(state, out);
            }
            return;
        }
        if (*unitary) {
            const DenseOperator op = circuit_unitary(v_p_circuit(*qubits));
            if (*as_json) {
                out << dense_to_json(op).dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < op.dim; ++i) {
                    for (std::size_t j = 0; j < op.dim; ++j) {
                        out << (j > 0 ? " " : "") << fmt_complex(op.at(i, j));
                    }
                    out << "\n";
                }
            }
            return;
        }
        const Circuit circuit = v_p_circuit(*qubits);
        if (*as_json) {
            out << circuit_to_json(circuit).dump(2) << "\n";
        } else {
            const GateCounts counts = gate_counts(circuit);
            out << "qubits: " << circuit.num_qubits << "\n";
            out << "gates: " << counts.total() << " (hadamard=" << counts.hadamard
                << " phase=" << counts.phase
                << " controlled_phase=" << counts.controlled_phase
                << " swap=" << counts.swap << ")\n";
        }
    });
}

void setup_verify(CLI::App& app, std::ostream& out, int& verify_status) {
    auto* cmd = app.add_subcommand(
        "verify", "run the oracle-equivalence suite; exits 0 iff every check passes");
    auto n = std::make_shared<std::size_t>(8);
    auto seed = std::make_shared<std::uint64_t>(20260809);
    cmd->add_option("--n", *n, "problem dimension, a power of two in [2, 32] (default 8)");
    cmd->add_option("--seed", *seed, "seed for the randomized checks (fixed default)");
    cmd->callback([&out, &verify_status, n, seed] { verify_status = run_verify(*n, *seed, out); });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"circulant shift circuits, rotation superpositions, and string transforms"};
    app.require_subcommand(1);

    int command_status = 0;
    setup_bwt(app, out);
    setup_suffix_array(app, out);
    setup_rotations(app, out);
    setup_sample(app, out, err, command_status);
    setup_sort_rotations(app, out);
    setup_gates(app, out);
    setup_simulate_vp(app, out);
    setup_verify(app, out, command_status);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.get_display_name() << ": run with --help for usage\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return command_status;
}

}  // namespace qcirc
