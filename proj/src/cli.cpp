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

#include "multiport_gpt/cli.hpp"

#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "multiport_gpt/constraints.hpp"
#include "multiport_gpt/errors.hpp"
#include "multiport_gpt/io.hpp"
#include "multiport_gpt/multiport.hpp"
#include "multiport_gpt/optimizer.hpp"
#include "multiport_gpt/reduction.hpp"

namespace multiport::cli {

namespace {

using io::Json;

struct OutputOptions {
    std::string out_path;
    std::string format = "json";
    std::string encoding = "rational";
};

void add_output_options(CLI::App* sub, OutputOptions& o, bool with_encoding = true) {
    sub->add_option("--out", o.out_path, "Write the result to FILE instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    if (with_encoding)
        sub->add_option("--encoding", o.encoding, "Number encoding")->check(CLI::IsMember({"rational", "float64"}));
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string label_of(const Json& occupations) {
    std::vector<int> occ = occupations.get<std::vector<int>>();
    return OccupationState(occ).label();
}

// Matrices become a labeled grid, state lists an index table, anything else
// a key,value listing of its scalar fields.
std::string to_csv(const Json& j) {
    std::ostringstream os;
    if (j.contains("matrix")) {
        os << csv_quote("output\\input");
        for (const auto& s : j["input_states"]) os << ',' << csv_quote(label_of(s));
        os << '\n';
        for (std::size_t r = 0; r < j["matrix"].size(); ++r) {
            os << csv_quote(label_of(j["output_states"][r]));
            for (const auto& v : j["matrix"][r]) os << ',' << csv_quote(scalar_text(v));
            os << '\n';
        }
    } else if (j.contains("states") && j.contains("weights")) {
        os << "state,weight\n";
        for (std::size_t i = 0; i < j["states"].size(); ++i)
            os << csv_quote(label_of(j["states"][i])) << ',' << csv_quote(scalar_text(j["weights"][i])) << '\n';
    } else if (j.contains("states")) {
        os << "index,state\n";
        for (std::size_t i = 0; i < j["states"].size(); ++i) os << i << ',' << csv_quote(label_of(j["states"][i])) << '\n';
    } else {
        os << "key,value\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            if (!it.value().is_array() && !it.value().is_object())
                os << csv_quote(it.key()) << ',' << csv_quote(scalar_text(it.value())) << '\n';
    }
    return os.str();
}

void emit(const Json& j, const OutputOptions& o, std::ostream& out) {
    const std::string text = o.format == "csv" ? to_csv(j) : io::format_json(j);
    if (o.out_path.empty())
        out << text;
    else
        io::write_text_file(o.out_path, text);
}

std::vector<const char*> as_argv(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return argv;
}

UnitaryMultiport load_unitary(const std::string& descriptor) {
    if (descriptor.rfind("file:", 0) == 0) return io::unitary_from_json(io::read_json_file(descriptor.substr(5)));
    return builtin_unitary(descriptor);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generalized-probabilistic toolkit for noninteracting identical particles on multiports",
                 "multiport-gpt"};
    app.require_subcommand(1);

    int particles = -1, modes = -1, to_particles = -1;
    bool pauli = false, composite = false, free_single = false, force_float = false, transpose = false;
    std::string unitary_name, kind_text = "boson", family_path, matrix_path, dist_path, input_text;
    std::string engine_text = "exact", rule_text = "dantzig";
    OutputOptions output;

    auto* states = app.add_subcommand("states", "List the canonical occupation states for N particles on K modes");
    states->add_option("-n,--particles", particles, "Particle number N")->required()->check(CLI::NonNegativeNumber);
    states->add_option("-k,--modes", modes, "Mode count K")->required()->check(CLI::PositiveNumber);
    states->add_flag("--pauli", pauli, "Keep only states with at most one particle per mode");
    add_output_options(states, output, false);

    auto* deletion = app.add_subcommand("deletion", "Particle-deletion matrix D^(N) or chain D^(N->M)");
    deletion->add_option("-n,--particles", particles, "Particle number N")->required()->check(CLI::PositiveNumber);
    deletion->add_option("-k,--modes", modes, "Mode count K")->required()->check(CLI::PositiveNumber);
    deletion->add_option("--to", to_particles, "Target particle number M (default N-1)")->check(CLI::NonNegativeNumber);
    deletion->add_flag("--pauli", pauli, "Use Pauli-restricted state spaces");
    add_output_options(deletion, output);

    auto* quantum = app.add_subcommand("quantum", "Quantum transition matrix of a multiport");
    quantum->add_option("--unitary", unitary_name, "bs:T, tritter, fourier:n, grover:n or file:PATH")->required();
    quantum->add_option("-n,--particles", particles, "Particle number N")->required()->check(CLI::NonNegativeNumber);
    quantum->add_option("-k,--modes", modes, "Mode count K (checked against the unitary)")->check(CLI::PositiveNumber);
    quantum->add_option("--kind", kind_text, "Particle statistics")
        ->check(CLI::IsMember({"boson", "fermion", "distinguishable"}));
    quantum->add_flag("--float", force_float, "Skip exact Gaussian arithmetic and snap float64 probabilities");
    add_output_options(quantum, output);

    auto* verify_cmd = app.add_subcommand("verify", "Check the framework axioms on a transformation family");
    verify_cmd->add_option("--family", family_path, "Family JSON file")->required()->check(CLI::ExistingFile);
    verify_cmd->add_flag("--composite", composite, "Also check the composite (product-evolution) principle");
    add_output_options(verify_cmd, output, false);

    auto* induce = app.add_subcommand("induce", "Solve for the lower-level matrix implied by consistency");
    induce->add_option("--matrix", matrix_path, "N-particle matrix JSON file")->required()->check(CLI::ExistingFile);
    induce->add_option("--to", to_particles, "Target particle number M < N")->required()->check(CLI::NonNegativeNumber);
    add_output_options(induce, output);

    auto* entropy = app.add_subcommand("entropy", "Shannon entropy and compositeness of a distribution");
    entropy->add_option("--dist", dist_path, "Distribution JSON file")->required()->check(CLI::ExistingFile);
    add_output_options(entropy, output, false);

    auto* bunching = app.add_subcommand("bunching", "Bunching probability of a transition matrix");
    bunching->add_option("--matrix", matrix_path, "Matrix JSON file")->required()->check(CLI::ExistingFile);
    bunching->add_option("--input", input_text, "Input state, e.g. 1,1,1 (default: most spread-out state)");
    add_output_options(bunching, output, false);

    auto* maximize = app.add_subcommand("maximize-bunching", "Maximize bunching over all admissible families (LP)");
    maximize->add_option("-n,--particles", particles, "Particle number N")->required()->check(CLI::Range(2, 64));
    maximize->add_option("-k,--modes", modes, "Mode count K")->required()->check(CLI::Range(2, 64));
    maximize->add_flag("--composite", composite, "Impose the composite principle on S^(2)");
    maximize->add_flag("--free-single-particle", free_single, "Let S^(1) vary instead of fixing it uniform");
    maximize->add_option("--input", input_text, "Objective input state (default: most spread-out state)");
    maximize->add_option("--engine", engine_text, "LP engine")->check(CLI::IsMember({"exact", "float"}));
    maximize->add_option("--pivot-rule", rule_text, "Simplex pivot rule")->check(CLI::IsMember({"bland", "dantzig"}));
    add_output_options(maximize, output);

    auto* feasibility = app.add_subcommand("feasibility", "Can a fixed N-particle matrix be completed to a family?");
    feasibility->add_option("--matrix", matrix_path, "N-particle matrix JSON file")->required()->check(CLI::ExistingFile);
    feasibility->add_flag("--transpose", transpose, "Read the matrix with rows as inputs");
    feasibility->add_option("--engine", engine_text, "LP engine")->check(CLI::IsMember({"exact", "float"}));
    feasibility->add_option("--pivot-rule", rule_text, "Simplex pivot rule")->check(CLI::IsMember({"bland", "dantzig"}));
    add_output_options(feasibility, output);

    const auto argv = as_argv(args);
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const io::Encoding encoding = io::parse_encoding(output.encoding);
        SimplexOptions simplex;
        simplex.rule = rule_text == "dantzig" ? PivotRule::dantzig : PivotRule::bland;

        if (states->parsed()) {
            emit(io::state_space_to_json(*enumerate_states(particles, modes, pauli)), output, out);
            return kExitOk;
        }
        if (deletion->parsed()) {
            const int target = to_particles < 0 ? particles - 1 : to_particles;
            emit(io::matrix_to_json(deletion_chain(particles, target, modes, pauli), encoding), output, out);
            return kExitOk;
        }
        if (quantum->parsed()) {
            const UnitaryMultiport u = load_unitary(unitary_name);
            if (modes > 0 && static_cast<std::size_t>(modes) != u.dimension())
                throw DimensionMismatch("unitary '" + unitary_name + "' has " + std::to_string(u.dimension()) +
                                        " modes, not " + std::to_string(modes));
            BuildOptions build;
            build.exact_when_possible = !force_float;
            emit(io::matrix_to_json(build_transition_matrix(u, particles, parse_particle_kind(kind_text), build), encoding),
                 output, out);
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const auto family = io::family_from_json(io::read_json_file(family_path));
            const VerificationReport report = verify(family, VerifyOptions{composite});
            emit(io::report_to_json(report), output, out);
            return report.passed() ? kExitOk : kExitVerificationFailed;
        }
        if (induce->parsed()) {
            const TransitionMatrix s = io::matrix_from_json(io::read_json_file(matrix_path));
            const InducedMatrix induced = induce_lower(s, to_particles);
            if (!induced.feasible()) {
                Json j;
                j["feasible"] = false;
                j["reason"] = induced.infeasibility;
                emit(j, output, out);
                return kExitVerificationFailed;
            }
            if (!is_doubly_stochastic(*induced.matrix))
                err << "note: the induced S^(" << to_particles << ") is not doubly stochastic\n";
            emit(io::matrix_to_json(*induced.matrix, encoding), output, out);
            return kExitOk;
        }
        if (entropy->parsed()) {
            const Distribution d = io::distribution_from_json(io::read_json_file(dist_path));
            Json j;
            j["entropy_bits"] = shannon_entropy(d);
            const int n = d.space()->particle_count();
            if (n >= 1) {
                const Distribution reduced =
                    apply(deletion_chain(n, 1, d.space()->mode_count(), d.space()->pauli_exclusion()), d);
                j["reduced_entropy_bits"] = shannon_entropy(reduced);
            }
            if (n == 2) j["composite"] = is_composite(d);
            emit(j, output, out);
            return kExitOk;
        }
        if (bunching->parsed()) {
            const TransitionMatrix s = io::matrix_from_json(io::read_json_file(matrix_path));
            const OccupationState input = input_text.empty()
                                              ? default_bunching_input(s.particle_count(), s.mode_count())
                                              : parse_occupation_state(input_text);
            Json j;
            j["input"] = input.occupations();
            j["bunching_probability"] = to_string(bunching_probability(s, input));
            if (s.particle_count() == 2 && s.is_square() && s.mode_count() >= 2) {
                j["average_pair_bunching"] = to_string(average_pair_bunching(s));
                j["pair_bunching_bound"] = to_string(pair_bunching_bound(s));
            }
            emit(j, output, out);
            return kExitOk;
        }
        if (maximize->parsed()) {
            BunchingOptions options;
            options.composite = composite;
            options.free_single_particle = free_single;
            options.engine = parse_engine(engine_text);
            options.simplex = simplex;
            if (!input_text.empty()) options.objective_input = parse_occupation_state(input_text);
            const LPSolution solution = maximize_bunching(modes, particles, options);
            emit(io::solution_to_json(solution, encoding), output, out);
            return solution.status == LPStatus::optimal ? kExitOk : kExitVerificationFailed;
        }
        if (feasibility->parsed()) {
            TransitionMatrix s = io::matrix_from_json(io::read_json_file(matrix_path));
            if (transpose)
                s = TransitionMatrix::unchecked(s.output_space(), s.input_space(), s.entries().transpose());
            const LPSolution solution = feasibility_check(s, s.mode_count(), parse_engine(engine_text), simplex);
            Json j = io::solution_to_json(solution, encoding);
            j["feasible"] = solution.status == LPStatus::optimal;
            emit(j, output, out);
            return solution.status == LPStatus::optimal ? kExitOk : kExitVerificationFailed;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace multiport::cli
