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

#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = qcirc::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: bwt golden output") {
    const CliResult r = run({"bwt", "banana$"});
    CHECK(r.status == 0);
    CHECK(r.out == "annb$aa\n");
    CHECK(r.err.empty());
}

TEST_CASE("cli: suffix-array golden output") {
    const CliResult r = run({"suffix-array", "banana$"});
    CHECK(r.status == 0);
    CHECK(r.out == "6 5 3 1 0 4 2\n");
}

TEST_CASE("cli: gates table and json") {
    const CliResult table = run({"gates", "--qubits", "3"});
    CHECK(table.status == 0);
    CHECK(table.out.find("total qubits:             6") != std::string::npos);
    CHECK(table.out.find("central controlled-phase: 9") != std::string::npos);

    const CliResult as_json = run({"gates", "--qubits", "3", "--json"});
    const json j = json::parse(as_json.out);
    CHECK(j.at("total_qubits") == 6);
    CHECK(j.at("central_controlled_phase") == 9);
}

TEST_CASE("cli: rotations json parses under the schema") {
    const CliResult r = run({"rotations", "aab$", "--json"});
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("n") == 4);
    CHECK(j.at("blocks") == json::array({"aab$", "$aab", "b$aa", "ab$a"}));
    CHECK(j.at("sentinel_pos") == json::array({3, 0, 1, 2}));
    CHECK(j.at("state").at("num_qubits") == 4);
    CHECK(j.at("state").at("amps").size() == 16);
}

TEST_CASE("cli: sample requires an explicit seed") {
    const CliResult r = run({"sample", "aab$", "--shots", "100"});
    CHECK(r.status == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("cli: sample reconstructs the sentinel order") {
    const CliResult r = run(
        {"sample", "aab$", "--shots", "20000", "--seed", "42", "--boost", "4", "--json"});
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("sentinel_positions") == json::array({3, 0, 1, 2}));
    CHECK(j.at("consistent") == true);
    CHECK(j.at("shots") == 20000);
}

TEST_CASE("cli: starved sampling exits with a diagnostic") {
    // One shot leaves three blocks empty: reconstruction cannot be consistent.
    const CliResult r = run({"sample", "ab$", "--shots", "1", "--seed", "0"});
    CHECK(r.status == 1);
    CHECK(!r.err.empty());
}

TEST_CASE("cli: sort-rotations prints rounds and final json order") {
    const CliResult r = run({"sort-rotations", "aab$"});
    CHECK(r.status == 0);
    CHECK(r.out.find("round 0 (even):") != std::string::npos);
    const std::size_t brace = r.out.find('{');
    REQUIRE(brace != std::string::npos);
    const json j = json::parse(r.out.substr(brace));
    CHECK(j.at("keys") == json::array({"$aab", "aab$", "ab$a", "b$aa"}));

    const CliResult jr = run({"sort-rotations", "aab$", "--json"});
    const json jj = json::parse(jr.out);
    CHECK(jj.at("rounds").size() == 4);
    CHECK(jj.at("keys") == json::array({"$aab", "aab$", "ab$a", "b$aa"}));
}

TEST_CASE("cli: simulate-vp unitary matches the block structure") {
    const CliResult r = run({"simulate-vp", "--qubits", "1", "--unitary", "--json"});
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.size() == 4);
    CHECK(j[0][0][0].get<double>() == doctest::Approx(1.0));
    CHECK(j[1][1][0].get<double>() == doctest::Approx(1.0));
    CHECK(j[2][3][0].get<double>() == doctest::Approx(1.0));
    CHECK(j[3][2][0].get<double>() == doctest::Approx(1.0));
    CHECK(std::abs(j[2][2][0].get<double>()) == doctest::Approx(0.0));
}

TEST_CASE("cli: simulate-vp pipeline state output") {
    const CliResult r = run({"simulate-vp", "--text", "ab$", "--json"});
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("num_qubits") == 4);
}

TEST_CASE("cli: verify passes and is byte-identical across runs") {
    const CliResult first = run({"verify", "--n", "8"});
    const CliResult second = run({"verify", "--n", "8"});
    CHECK(first.status == 0);
    CHECK(second.status == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("VERIFY PASS") != std::string::npos);
}

TEST_CASE("cli: verify rejects bad dimensions") {
    CHECK(run({"verify", "--n", "6"}).status == 2);
    CHECK(run({"verify", "--n", "64"}).status == 2);
}

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"bwt"}).status == 2);
    CHECK(run({"bwt", "banana$", "--bogus"}).status == 2);
    CHECK(run({"bwt", "banana"}).status == 2);  // missing sentinel
}

TEST_CASE("cli: help is served on stdout") {
    const CliResult r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("bwt") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("cli: identical argv gives byte-identical output") {
    const std::vector<std::string> argv = {"sample", "aab$", "--shots", "500",
                                           "--seed",  "7",    "--boost", "4"};
    const CliResult a = run(argv);
    const CliResult b = run(argv);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
}
