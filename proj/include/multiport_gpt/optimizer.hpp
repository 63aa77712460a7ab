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

#include <optional>
#include <string>
#include <vector>

#include "multiport_gpt/constraints.hpp"
#include "multiport_gpt/fock.hpp"
#include "multiport_gpt/lp.hpp"

namespace multiport {

/// Largest program (in variables) the exact engine accepts.
inline constexpr std::size_t kExactVariableLimit = 2500;

/// One particle-number level S^(M) of a transformation family: either fixed
/// or a block of LP variables (row-major, d_M x d_M, starting at `offset`).
struct FamilyLevel {
    int particles = 0;
    SpacePtr space;
    std::optional<TransitionMatrix> fixed;
    std::size_t offset = 0;

    bool is_variable() const { return !fixed.has_value(); }
    std::size_t variable(std::size_t out, std::size_t in) const { return offset + out * space->size() + in; }
};

/// The polytope of families S^(1..N) that are doubly stochastic, consistent
/// between adjacent levels (which implies every pair), and optionally obey
/// the composite principle, together with a linear objective.
struct FamilyProgram {
    int mode_count = 0;
    int particle_count = 0;
    std::vector<FamilyLevel> levels;  // levels[M-1] is S^(M)
    bool composite = false;
    std::optional<OccupationState> objective_input;
    LinearProgram lp;
    /// Set when the fixed levels alone already violate an axiom.
    std::vector<std::string> violations;

    std::size_t variable_count() const { return lp.variable_count(); }
};

struct BunchingOptions {
    bool composite = false;
    Engine engine = Engine::exact;
    /// Let S^(1) vary (doubly stochastic) instead of fixing it to the uniform
    /// 1/K matrix of a symmetric multiport. Incompatible with `composite`.
    bool free_single_particle = false;
    /// Objective input; defaults to default_bunching_input(N, K).
    std::optional<OccupationState> objective_input;
    SimplexOptions simplex;
};

struct LPSolution {
    LPStatus status = LPStatus::infeasible;
    Rational optimal_value;
    /// S^(1..N) at the optimum; empty unless status is optimal.
    std::vector<TransitionMatrix> witness;
    LPResult lp;
    /// Exact engine: the primal/dual certificate was re-checked.
    bool certificate_verified = false;
    std::optional<VerificationReport> witness_report;
    std::vector<std::string> notes;
};

/// Uniform 1/K single-particle matrix.
TransitionMatrix uniform_single_particle(int mode_count);

/// Assembles the program. `fixed_levels[M-1]` fixes S^(M) when set.
FamilyProgram build_family_program(int mode_count, const std::vector<std::optional<TransitionMatrix>>& fixed_levels,
                                   bool composite, const std::optional<OccupationState>& objective_input);

LPSolution solve_family_program(const FamilyProgram& program, Engine engine, const SimplexOptions& options = {});

/// Maximizes the N-particle bunching probability from the objective input
/// over all admissible families with S^(1) fixed to the uniform matrix.
LPSolution maximize_bunching(int mode_count, int particle_count, const BunchingOptions& options = {});

/// Decides whether S^(1..N-1) exist that complete `fixed` (an N-particle
/// matrix) to an admissible family, returning a witness family if so.
LPSolution feasibility_check(const TransitionMatrix& fixed, int mode_count, Engine engine = Engine::exact,
                             const SimplexOptions& options = {});

}  // namespace multiport
