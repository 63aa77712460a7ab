// Copyright 2026 The multiport-gpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "multiport_gpt/errors.hpp"
#include "multiport_gpt/io.hpp"
#include "multiport_gpt/multiport.hpp"
#include "support.hpp"

using namespace multiport;
using io::Json;
using multiport::testing::fixture_path;
using multiport::testing::q;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string error_of(const Json& j) {
    try {
        io::matrix_from_json(j);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

Json small_matrix() {
    return Json::parse(R"({"mode_count": 2, "input_states": [[1,0],[0,1]], "output_states": [[1,0],[0,1]],
                          "matrix": [["1/3","2/3"],["2/3","1/3"]]})");
}

}  // namespace

TEST_CASE("fixtures round-trip byte for byte") {
    for (const auto& entry : std::filesystem::directory_iterator(MULTIPORT_FIXTURE_DIR)) {
        if (entry.path().extension() != ".json") continue;
        CAPTURE(entry.path().filename().string());
        const std::string text = slurp(entry.path().string());
        const Json j = Json::parse(text);
        const Json again = j.contains("members") ? io::family_to_json(io::family_from_json(j))
                                                 : io::matrix_to_json(io::matrix_from_json(j));
        CHECK(io::format_json(again) == text);
    }
}

TEST_CASE("states are reordered canonically on load") {
    Json j = Json::parse(R"({"mode_count": 2, "particle_count": 2,
        "input_states": [[2,0],[1,1],[0,2]], "output_states": [[2,0],[1,1],[0,2]],
        "matrix": [["1/4","1/2","1/4"],["1/2","0","1/2"],["1/4","1/2","1/4"]]})");
    CHECK(io::matrix_from_json(j) == multiport::testing::load_matrix("beamsplitter_2p.json"));
}

TEST_CASE("errors name the offending state") {
    Json j = small_matrix();
    j["input_states"][1] = Json::parse("[2,0]");
    CHECK(error_of(j).find("{2,0}") != std::string::npos);

    j = small_matrix();
    j["input_states"][1] = Json::parse("[1,0]");
    CHECK(error_of(j).find("appears twice") != std::string::npos);

    j = small_matrix();
    j["input_states"][1] = Json::parse("[0,1,0]");
    CHECK_FALSE(error_of(j).empty());

    j = small_matrix();
    j["matrix"][0][1] = "two thirds";
    CHECK(error_of(j).find("{1,0}") != std::string::npos);

    j = small_matrix();
    j["matrix"].erase(1);
    CHECK(error_of(j).find("one row per output") != std::string::npos);

    j = small_matrix();
    j.erase("mode_count");
    CHECK_FALSE(error_of(j).empty());

    CHECK_THROWS_AS(io::read_json_file(fixture_path("no_such_file.json")), ParseError);
}

TEST_CASE("float64 encoding snaps back to the same rationals") {
    const TransitionMatrix t = build_transition_matrix(tritter(), 3, ParticleKind::boson);
    const Json j = io::matrix_to_json(t, io::Encoding::float64);
    CHECK(j["encoding"] == "float64");
    CHECK(j["matrix"][0][0].is_number_float());
    CHECK(io::matrix_from_json(j) == t);
    CHECK(io::matrix_from_json(Json::parse(io::format_json(j))) == t);
}

TEST_CASE("distributions round-trip") {
    const SpacePtr space = enumerate_states(2, 3);
    std::vector<Rational> w(space->size());
    w[0] = q("1/2");
    w[5] = q("1/2");
    const Distribution d(space, w);
    const Json j = io::distribution_to_json(d);
    CHECK(j["weights"][0] == "1/2");
    CHECK(io::distribution_from_json(j) == d);
    Json bad = j;
    bad["weights"][0] = "3/4";
    CHECK_THROWS_AS(io::distribution_from_json(bad), InvalidArgument);
}

TEST_CASE("Pauli flag survives serialization") {
    const TransitionMatrix f = build_transition_matrix(fourier(4), 2, ParticleKind::fermion);
    const Json j = io::matrix_to_json(f);
    CHECK(j["pauli_exclusion"] == true);
    CHECK(io::matrix_from_json(j) == f);
}

TEST_CASE("unitary files") {
    const Json bare = Json::parse(R"([[[0.7071067811865476,0],[0,0.7071067811865476]],
                                      [[0,0.7071067811865476],[0.7071067811865476,0]]])");
    const UnitaryMultiport u = io::unitary_from_json(bare);
    CHECK(build_transition_matrix(u, 2, ParticleKind::boson) == multiport::testing::load_matrix("beamsplitter_2p.json"));
    Json named = Json::object();
    named["name"] = "swap";
    named["amplitudes"] = Json::parse("[[[0,0],[1,0]],[[1,0],[0,0]]]");
    CHECK(io::unitary_from_json(named).name() == "swap");
    CHECK_THROWS_AS(io::unitary_from_json(Json::parse("[[[1,0],[0,0]],[[1,0]]]")), DimensionMismatch);
    CHECK_THROWS_AS(io::unitary_from_json(Json::parse("[[[1,0],[1,0]],[[1,0],[1,0]]]")), InvalidArgument);
}

TEST_CASE("printer layout") {
    Json j = Json::object();
    j["b"] = Json::parse("[1, 2]");
    j["a"] = Json::parse(R"([["x"], []])");
    j["c"] = Json::object();
    CHECK(io::format_json(j) == "{\n  \"a\": [\n    [\"x\"],\n    []\n  ],\n  \"b\": [1, 2],\n  \"c\": {}\n}\n");
}
