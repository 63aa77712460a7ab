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

#include <string>
#include <vector>

#include "json.hpp"

#include "multiport_gpt/constraints.hpp"
#include "multiport_gpt/fock.hpp"
#include "multiport_gpt/multiport.hpp"
#include "multiport_gpt/optimizer.hpp"

namespace multiport::io {

using Json = nlohmann::json;

enum class Encoding { rational, float64 };

Encoding parse_encoding(const std::string& text);

/// Deterministic layout shared by every file the tools write: keys sorted,
/// two-space indentation, arrays of scalars kept on one line, trailing newline.
std::string format_json(const Json& value);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json state_space_to_json(const StateSpace& space);

/// {particle_count, mode_count, input_states, output_states, encoding, matrix}
/// with rows indexed by output state. Rationals are written as "p/q".
Json matrix_to_json(const TransitionMatrix& matrix, Encoding encoding = Encoding::rational);
/// Accepts states in any order and permutes them into canonical order.
/// float64 entries are snapped to rationals with denominator <= 10^4.
TransitionMatrix matrix_from_json(const Json& json);

/// {particle_count, mode_count, states, encoding, weights}
Json distribution_to_json(const Distribution& dist, Encoding encoding = Encoding::rational);
Distribution distribution_from_json(const Json& json);

/// {mode_count, members: [matrix...]}
Json family_to_json(const std::vector<TransitionMatrix>& family, Encoding encoding = Encoding::rational);
std::vector<TransitionMatrix> family_from_json(const Json& json);

/// Either {"amplitudes": [[[re, im], ...], ...], "name": ...} or the bare
/// nested array.
UnitaryMultiport unitary_from_json(const Json& json);

Json report_to_json(const VerificationReport& report);
Json solution_to_json(const LPSolution& solution, Encoding encoding = Encoding::rational);

}  // namespace multiport::io
