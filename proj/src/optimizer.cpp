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

#include "multiport_gpt/optimizer.hpp"

#include <map>

#include "multiport_gpt/errors.hpp"
#include "multiport_gpt/reduction.hpp"

namespace multiport {

namespace {

struct SparseRow {
    std::map<std::size_t, Rational> terms;
    Rational constant;  // moved to the right-hand side with opposite sign

    void add(const FamilyLevel& level, std::size_t out, std::size_t in, const Rational& coefficient) {
        if (sgn(coefficient) == 0) return;
        if (level.is_variable())
            terms[level.variable(out, in)] += coefficient;
        else
            constant += coefficient * (*level.fixed)(out, in);
    }
};

class RowCollector {
public:
    explicit RowCollector(FamilyProgram& program) : program_(program) {}

    void emit(SparseRow row, const std::string& what) {
        std::erase_if(row.terms, [](const auto& t) { return sgn(t.second) == 0; });
        if (row.terms.empty()) {
            if (sgn(row.constant) != 0) program_.violations.push_back(what);
            return;
        }
        rows_.push_back(std::move(row));
    }

    void finish(std::size_t variables) {
        program_.lp.constraints = RationalMatrix(rows_.size(), variables);
        program_.lp.rhs.assign(rows_.size(), Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (const auto& [var, coef] : rows_[i].terms) program_.lp.constraints(i, var) = coef;
            program_.lp.rhs[i] = -rows_[i].constant;
        }
    }

private:
    FamilyProgram& program_;
    std::vector<SparseRow> rows_;
};

std::string level_name(int n) { return "S^(" + std::to_string(n) + ")"; }

}  // namespace

TransitionMatrix uniform_single_particle(int mode_count) {
    const SpacePtr space = enumerate_states(1, mode_count);
    RationalMatrix u(space->size(), space->size(), ratio(1, mode_count));
    return TransitionMatrix::stochastic(space, space, std::move(u));
}

FamilyProgram build_family_program(int mode_count, const std::vector<std::optional<TransitionMatrix>>& fixed_levels,
                                   bool composite, const std::optional<OccupationState>& objective_input) {
    if (fixed_levels.empty()) throw InvalidArgument("a family needs at least one level");
    FamilyProgram program;
    program.mode_count = mode_count;
    program.particle_count = static_cast<int>(fixed_levels.size());
    program.composite = composite;
    program.objective_input = objective_input;

    std::size_t variables = 0;
    for (int m = 1; m <= program.particle_count; ++m) {
        FamilyLevel level;
        level.particles = m;
        level.space = enumerate_states(m, mode_count);
        level.fixed = fixed_levels[m - 1];
        if (level.fixed) {
            if (!(*level.fixed->input_space() == *level.space) || !level.fixed->is_square())
                throw DimensionMismatch("fixed " + level_name(m) + " is not over " + level.space->describe());
            if (!is_doubly_stochastic(*level.fixed))
                program.violations.push_back("fixed " + level_name(m) + " is not doubly stochastic");
        } else {
            level.offset = variables;
            variables += level.space->size() * level.space->size();
        }
        program.levels.push_back(std::move(level));
    }

    RowCollector rows(program);
    for (const FamilyLevel& level : program.levels) {
        if (!level.is_variable()) continue;
        const std::size_t d = level.space->size();
        for (std::size_t c = 0; c < d; ++c) {
            SparseRow col_sum, row_sum;
            for (std::size_t r = 0; r < d; ++r) {
                col_sum.add(level, r, c, 1);
                row_sum.add(level, c, r, 1);
            }
            col_sum.constant = -1;
            row_sum.constant = -1;
            rows.emit(std::move(col_sum), "column sum of " + level_name(level.particles));
            rows.emit(std::move(row_sum), "row sum of " + level_name(level.particles));
        }
    }

    // D^(M) S^(M) - S^(M-1) D^(M) = 0 for adjacent levels.
    for (int m = 2; m <= program.particle_count; ++m) {
        const FamilyLevel& upper = program.levels[m - 1];
        const FamilyLevel& lower = program.levels[m - 2];
        const TransitionMatrix d = deletion_matrix(m, mode_count);
        const std::size_t d_lower = lower.space->size(), d_upper = upper.space->size();
        for (std::size_t i = 0; i < d_lower; ++i) {
            for (std::size_t j = 0; j < d_upper; ++j) {
                SparseRow row;
                for (std::size_t k = 0; k < d_upper; ++k) row.add(upper, k, j, d(i, k));
                for (std::size_t l = 0; l < d_lower; ++l) row.add(lower, i, l, Rational(-d(l, j)));
                rows.emit(std::move(row), "consistency between " + level_name(m) + " and " + level_name(m - 1) +
                                              " at (" + (*lower.space)[i].label() + ", " + (*upper.space)[j].label() +
                                              ")");
            }
        }
    }

    if (composite && program.particle_count >= 2) {
        const FamilyLevel& single = program.levels[0];
        const FamilyLevel& pair = program.levels[1];
        if (single.is_variable())
            throw InvalidArgument("the composite principle is quadratic when S^(1) is free; fix S^(1)");
        for (int k = 0; k < mode_count; ++k) {
            const auto e_k = OccupationState::concentrated(mode_count, k, 1);
            const auto two_k = OccupationState::concentrated(mode_count, k, 2);
            const std::size_t col = pair.space->index_of(two_k);
            const Distribution expected =
                symmetric_product(single.fixed->column(single.space->index_of(e_k)), 2);
            for (std::size_t r = 0; r < pair.space->size(); ++r) {
                SparseRow row;
                row.add(pair, r, col, 1);
                row.constant -= expected[r];
                rows.emit(std::move(row), "composite principle for input " + two_k.label());
            }
        }
    }

    rows.finish(variables);
    program.lp.objective.assign(variables, Rational(0));
    const FamilyLevel& top = program.levels.back();
    if (objective_input && top.is_variable()) {
        const std::size_t in = top.space->index_of(*objective_input);
        for (int k = 0; k < mode_count; ++k) {
            const auto bunched = OccupationState::concentrated(mode_count, k, program.particle_count);
            program.lp.objective[top.variable(top.space->index_of(bunched), in)] = 1;
        }
    }
    return program;
}

LPSolution solve_family_program(const FamilyProgram& program, Engine engine, const SimplexOptions& options) {
    LPSolution solution;
    if (!program.violations.empty()) {
        solution.status = LPStatus::infeasible;
        solution.notes = program.violations;
        return solution;
    }
    if (engine == Engine::exact && program.variable_count() > kExactVariableLimit)
        throw InvalidArgument("program has " + std::to_string(program.variable_count()) +
                              " variables; the exact engine is limited to " + std::to_string(kExactVariableLimit));

    solution.lp = solve_lp(program.lp, engine, options);
    solution.status = solution.lp.status;
    if (solution.status != LPStatus::optimal) {
        solution.notes.push_back("linear program is " + to_string(solution.status));
        return solution;
    }
    solution.optimal_value = solution.lp.optimal_value;
    if (engine == Engine::exact) solution.certificate_verified = certificate_holds(program.lp, solution.lp);

    for (const FamilyLevel& level : program.levels) {
        if (!level.is_variable()) {
            solution.witness.push_back(*level.fixed);
            continue;
        }
        const std::size_t d = level.space->size();
        RationalMatrix entries(d, d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                const std::size_t var = level.variable(r, c);
                if (engine == Engine::exact) {
                    entries(r, c) = solution.lp.primal[var];
                } else if (auto q = snap_to_rational(solution.lp.primal_float[var], 1'000'000, 1e-7)) {
                    entries(r, c) = *q;
                } else {
                    solution.notes.push_back("float witness entry of " + level_name(level.particles) +
                                             " could not be rationalized");
                    solution.witness.clear();
                    return solution;
                }
            }
        }
        solution.witness.push_back(TransitionMatrix::unchecked(level.space, level.space, std::move(entries)));
    }
    solution.witness_report = verify(solution.witness, VerifyOptions{program.composite});
    if (!solution.witness_report->passed()) solution.notes.push_back("witness family failed verification");
    return solution;
}

LPSolution maximize_bunching(int mode_count, int particle_count, const BunchingOptions& options) {
    if (mode_count < 2) throw InvalidArgument("bunching needs at least two modes");
    if (particle_count < 2) throw InvalidArgument("bunching needs at least two particles");
    const OccupationState input = options.objective_input.value_or(default_bunching_input(particle_count, mode_count));
    if (input.particle_count() != particle_count || static_cast<int>(input.mode_count()) != mode_count)
        throw InvalidArgument("objective input " + input.label() + " is not an N=" + std::to_string(particle_count) +
                              ", K=" + std::to_string(mode_count) + " state");
    std::vector<std::optional<TransitionMatrix>> fixed(static_cast<std::size_t>(particle_count));
    if (!options.free_single_particle) fixed[0] = uniform_single_particle(mode_count);
    const FamilyProgram program = build_family_program(mode_count, fixed, options.composite, input);
    return solve_family_program(program, options.engine, options.simplex);
}

LPSolution feasibility_check(const TransitionMatrix& fixed, int mode_count, Engine engine,
                             const SimplexOptions& options) {
    if (!fixed.is_square()) throw DimensionMismatch("feasibility check needs a square N-particle matrix");
    if (fixed.mode_count() != mode_count)
        throw DimensionMismatch("matrix is over " + std::to_string(fixed.mode_count()) + " modes, not " +
                                std::to_string(mode_count));
    if (fixed.input_space()->pauli_exclusion())
        throw InvalidArgument("feasibility completion is only defined on unrestricted state spaces");
    const int n = fixed.particle_count();
    if (n < 1) throw InvalidArgument("feasibility check needs at least one particle");
    std::vector<std::optional<TransitionMatrix>> levels(static_cast<std::size_t>(n));
    levels.back() = fixed;
    const FamilyProgram program = build_family_program(mode_count, levels, false, std::nullopt);
    return solve_family_program(program, engine, options);
}

}  // namespace multiport
