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

#include "multiport_gpt/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "multiport_gpt/errors.hpp"

namespace multiport::io {

namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void format_into(const Json& j, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(it.key()).dump() + ": ";
            format_into(it.value(), depth + 1, out);
        }
        out += "\n" + close_pad + "}";
    } else if (j.is_array()) {
        if (std::all_of(j.begin(), j.end(), is_scalar)) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ", ";
                out += j[i].dump();
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += pad;
            format_into(j[i], depth + 1, out);
        }
        out += "\n" + close_pad + "]";
    } else {
        out += j.dump();
    }
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

int int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
    return v.get<int>();
}

std::string encoding_name(Encoding e) { return e == Encoding::rational ? "rational" : "float64"; }

Json encode(const Rational& q, Encoding e) {
    if (e == Encoding::rational) return to_string(q);
    return q.get_d();
}

Rational decode(const Json& v, Encoding e, const std::string& where) {
    if (e == Encoding::rational) {
        if (v.is_string()) {
            try {
                return parse_rational(v.get<std::string>());
            } catch (const ParseError& err) {
                throw ParseError("entry at " + where + ": " + err.what());
            }
        }
        if (v.is_number_integer()) return Rational(v.get<long>());
        throw ParseError("rational entry at " + where + " must be a \"p/q\" string");
    }
    if (!v.is_number()) throw ParseError("float64 entry at " + where + " must be a number");
    if (auto q = snap_to_rational(v.get<double>())) return *q;
    throw ParseError("float64 entry " + v.dump() + " at " + where + " has no small-denominator rational");
}

Encoding encoding_of(const Json& j) {
    if (!j.contains("encoding")) return Encoding::rational;
    const Json& e = j.at("encoding");
    if (!e.is_string()) throw ParseError("field 'encoding' must be a string");
    return parse_encoding(e.get<std::string>());
}

std::vector<OccupationState> parse_states(const Json& j, const char* name, int mode_count) {
    const Json& arr = field(j, name);
    if (!arr.is_array()) throw ParseError(std::string("field '") + name + "' must be an array of occupation arrays");
    std::vector<OccupationState> states;
    for (const Json& s : arr) {
        if (!s.is_array()) throw ParseError(std::string("entries of '") + name + "' must be arrays");
        std::vector<int> occ;
        for (const Json& n : s) {
            if (!n.is_number_integer()) throw ParseError(std::string("occupations in '") + name + "' must be integers");
            occ.push_back(n.get<int>());
        }
        OccupationState st(std::move(occ));
        if (static_cast<int>(st.mode_count()) != mode_count)
            throw DimensionMismatch("state " + st.label() + " in '" + name + "' does not have " +
                                    std::to_string(mode_count) + " modes");
        states.push_back(std::move(st));
    }
    if (states.empty()) throw ParseError(std::string("field '") + name + "' is empty");
    return states;
}

// Position of each listed state in `space`, rejecting duplicates and gaps.
std::vector<std::size_t> placement(const std::vector<OccupationState>& states, const StateSpace& space,
                                   const char* name) {
    std::vector<std::size_t> pos;
    std::set<std::size_t> seen;
    for (const auto& s : states) {
        const auto idx = space.find(s);
        if (!idx) throw DimensionMismatch("state " + s.label() + " in '" + name + "' is not in " + space.describe());
        if (!seen.insert(*idx).second) throw ParseError("state " + s.label() + " appears twice in '" + name + "'");
        pos.push_back(*idx);
    }
    if (pos.size() != space.size()) {
        for (const auto& s : space)
            if (!seen.count(space.index_of(s)))
                throw DimensionMismatch("'" + std::string(name) + "' is missing state " + s.label() + " of " +
                                        space.describe());
    }
    return pos;
}

Json states_json(const StateSpace& space) {
    Json arr = Json::array();
    for (const auto& s : space) arr.push_back(s.occupations());
    return arr;
}

bool pauli_of(const Json& j) {
    if (!j.contains("pauli_exclusion")) return false;
    if (!j.at("pauli_exclusion").is_boolean()) throw ParseError("field 'pauli_exclusion' must be a boolean");
    return j.at("pauli_exclusion").get<bool>();
}

}  // namespace

Encoding parse_encoding(const std::string& text) {
    if (text == "rational") return Encoding::rational;
    if (text == "float64") return Encoding::float64;
    throw ParseError("unknown encoding '" + text + "' (expected rational or float64)");
}

std::string format_json(const Json& value) {
    std::string out;
    format_into(value, 0, out);
    out += "\n";
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

Json state_space_to_json(const StateSpace& space) {
    Json j;
    j["particle_count"] = space.particle_count();
    j["mode_count"] = space.mode_count();
    j["state_count"] = space.size();
    j["states"] = states_json(space);
    if (space.pauli_exclusion()) j["pauli_exclusion"] = true;
    return j;
}

Json matrix_to_json(const TransitionMatrix& matrix, Encoding encoding) {
    Json j;
    j["particle_count"] = matrix.particle_count();
    j["mode_count"] = matrix.mode_count();
    j["input_states"] = states_json(*matrix.input_space());
    j["output_states"] = states_json(*matrix.output_space());
    j["encoding"] = encoding_name(encoding);
    if (matrix.input_space()->pauli_exclusion()) j["pauli_exclusion"] = true;
    Json rows = Json::array();
    for (std::size_t r = 0; r < matrix.entries().rows(); ++r) {
        Json row = Json::array();
        for (const Rational& q : matrix.entries().row(r)) row.push_back(encode(q, encoding));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j;
}

TransitionMatrix matrix_from_json(const Json& json) {
    const int k = int_field(json, "mode_count");
    const Encoding encoding = encoding_of(json);
    const bool pauli = pauli_of(json);
    const auto inputs = parse_states(json, "input_states", k);
    const auto outputs = parse_states(json, "output_states", k);
    const int n_in = inputs.front().particle_count(), n_out = outputs.front().particle_count();
    for (const auto& s : inputs)
        if (s.particle_count() != n_in) throw DimensionMismatch("input state " + s.label() + " has a different particle count");
    for (const auto& s : outputs)
        if (s.particle_count() != n_out) throw DimensionMismatch("output state " + s.label() + " has a different particle count");
    if (json.contains("particle_count") && int_field(json, "particle_count") != n_in)
        throw DimensionMismatch("particle_count does not match the input states");

    const SpacePtr in_space = enumerate_states(n_in, k, pauli);
    const SpacePtr out_space = enumerate_states(n_out, k, pauli);
    const auto in_pos = placement(inputs, *in_space, "input_states");
    const auto out_pos = placement(outputs, *out_space, "output_states");

    const Json& rows = field(json, "matrix");
    if (!rows.is_array() || rows.size() != outputs.size())
        throw DimensionMismatch("'matrix' needs one row per output state (" + std::to_string(outputs.size()) + ")");
    RationalMatrix entries(out_space->size(), in_space->size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != inputs.size())
            throw DimensionMismatch("row for output " + outputs[r].label() + " needs " + std::to_string(inputs.size()) +
                                    " entries");
        for (std::size_t c = 0; c < inputs.size(); ++c)
            entries(out_pos[r], in_pos[c]) =
                decode(rows[r][c], encoding, "(" + outputs[r].label() + ", " + inputs[c].label() + ")");
    }
    return TransitionMatrix::unchecked(in_space, out_space, std::move(entries));
}

Json distribution_to_json(const Distribution& dist, Encoding encoding) {
    Json j;
    j["particle_count"] = dist.space()->particle_count();
    j["mode_count"] = dist.space()->mode_count();
    j["states"] = states_json(*dist.space());
    j["encoding"] = encoding_name(encoding);
    if (dist.space()->pauli_exclusion()) j["pauli_exclusion"] = true;
    Json w = Json::array();
    for (const Rational& q : dist.weights()) w.push_back(encode(q, encoding));
    j["weights"] = std::move(w);
    return j;
}

Distribution distribution_from_json(const Json& json) {
    const int k = int_field(json, "mode_count");
    const Encoding encoding = encoding_of(json);
    const auto states = parse_states(json, "states", k);
    const int n = states.front().particle_count();
    for (const auto& s : states)
        if (s.particle_count() != n) throw DimensionMismatch("state " + s.label() + " has a different particle count");
    const SpacePtr space = enumerate_states(n, k, pauli_of(json));
    const auto pos = placement(states, *space, "states");
    const Json& w = field(json, "weights");
    if (!w.is_array() || w.size() != states.size()) throw DimensionMismatch("'weights' needs one entry per state");
    std::vector<Rational> weights(space->size());
    for (std::size_t i = 0; i < states.size(); ++i) weights[pos[i]] = decode(w[i], encoding, states[i].label());
    return Distribution(space, std::move(weights));
}

Json family_to_json(const std::vector<TransitionMatrix>& family, Encoding encoding) {
    Json j;
    j["mode_count"] = family.empty() ? 0 : family.front().mode_count();
    Json members = Json::array();
    for (const auto& m : family) members.push_back(matrix_to_json(m, encoding));
    j["members"] = std::move(members);
    return j;
}

std::vector<TransitionMatrix> family_from_json(const Json& json) {
    const int k = int_field(json, "mode_count");
    const Json& members = field(json, "members");
    if (!members.is_array() || members.empty()) throw ParseError("'members' must be a non-empty array of matrices");
    std::vector<TransitionMatrix> family;
    for (const Json& m : members) {
        family.push_back(matrix_from_json(m));
        if (family.back().mode_count() != k)
            throw DimensionMismatch("family member over " + std::to_string(family.back().mode_count()) +
                                    " modes in a K=" + std::to_string(k) + " family");
    }
    return family;
}

UnitaryMultiport unitary_from_json(const Json& json) {
    const Json& rows = json.is_object() ? field(json, "amplitudes") : json;
    const std::string name = json.is_object() && json.contains("name") ? json.at("name").get<std::string>() : "custom";
    if (!rows.is_array() || rows.empty()) throw ParseError("unitary amplitudes must be a non-empty array of rows");
    const std::size_t k = rows.size();
    ComplexMatrix u(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        if (!rows[r].is_array() || rows[r].size() != k) throw DimensionMismatch("unitary must be square");
        for (std::size_t c = 0; c < k; ++c) {
            const Json& z = rows[r][c];
            if (z.is_number()) {
                u(r, c) = z.get<double>();
            } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
                u(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
            } else {
                throw ParseError("unitary entry (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") must be [re, im]");
            }
        }
    }
    return UnitaryMultiport(std::move(u), name);
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["passed"] = report.passed();
    j["doubly_stochastic"] = report.doubly_stochastic;
    Json consistency = Json::array();
    for (const auto& c : report.consistency) {
        Json item;
        item["lower_particles"] = c.lower_particles;
        item["holds"] = c.holds;
        item["max_violation"] = to_string(c.max_violation);
        consistency.push_back(std::move(item));
    }
    j["consistency"] = std::move(consistency);
    j["composite_principle"] = report.composite_principle ? Json(*report.composite_principle) : Json(nullptr);
    j["notes"] = report.notes;
    return j;
}

Json solution_to_json(const LPSolution& solution, Encoding encoding) {
    Json j;
    j["status"] = to_string(solution.status);
    j["engine"] = to_string(solution.lp.engine);
    j["pivots"] = solution.lp.pivots;
    if (solution.status == LPStatus::optimal) {
        j["objective_value"] = to_string(solution.optimal_value);
        j["objective_value_float"] = solution.lp.optimal_value_float;
        if (solution.lp.engine == Engine::exact) j["certificate_verified"] = solution.certificate_verified;
        if (!solution.witness.empty()) j["witness"] = family_to_json(solution.witness, encoding);
        if (solution.witness_report) j["witness_report"] = report_to_json(*solution.witness_report);
    }
    j["notes"] = solution.notes;
    return j;
}

}  // namespace multiport::io
