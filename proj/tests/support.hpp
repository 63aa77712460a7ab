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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "multiport_gpt/fock.hpp"
#include "multiport_gpt/io.hpp"
#include "multiport_gpt/rational.hpp"

namespace multiport::testing {

inline std::string fixture_path(const std::string& name) { return std::string(MULTIPORT_FIXTURE_DIR) + "/" + name; }

inline TransitionMatrix load_matrix(const std::string& name) {
    return io::matrix_from_json(io::read_json_file(fixture_path(name)));
}

inline std::vector<TransitionMatrix> load_family(const std::string& name) {
    return io::family_from_json(io::read_json_file(fixture_path(name)));
}

inline Rational q(const char* text) { return parse_rational(text); }

// Random distribution with small positive integer weights; `zero_chance` in
// percent drops entries to zero (at least one entry is kept).
inline Distribution random_distribution(SpacePtr space, std::mt19937_64& rng, int zero_chance = 0) {
    std::uniform_int_distribution<int> weight(1, 12), percent(0, 99);
    std::vector<long> raw(space->size());
    long total = 0;
    for (auto& w : raw) {
        w = percent(rng) < zero_chance ? 0 : weight(rng);
        total += w;
    }
    if (total == 0) {
        raw[std::uniform_int_distribution<std::size_t>(0, raw.size() - 1)(rng)] = 1;
        total = 1;
    }
    std::vector<Rational> weights;
    for (long w : raw) weights.push_back(ratio(w, total));
    return Distribution(space, std::move(weights));
}

}  // namespace multiport::testing
