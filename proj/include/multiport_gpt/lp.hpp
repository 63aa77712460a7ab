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

#include <cstddef>
#include <string>
#include <vector>

#include "multiport_gpt/rational.hpp"

namespace multiport {

/// maximize objective·x  subject to  constraints·x = rhs,  x_j >= 0 where
/// nonnegative[j] (an empty flag vector means every variable is nonnegative).
struct LinearProgram {
    std::vector<Rational> objective;
    RationalMatrix constraints;
    std::vector<Rational> rhs;
    std::vector<bool> nonnegative;

    std::size_t variable_count() const { return objective.size(); }
    bool is_nonnegative(std::size_t j) const { return nonnegative.empty() || nonnegative[j]; }
};

enum class Engine { exact, floating };
enum class LPStatus { optimal, infeasible, unbounded };
enum class PivotRule {
    /// Lowest-index entering and leaving variables; never cycles.
    bland,
    /// Most negative reduced cost, falling back to Bland after a run of
    /// degenerate pivots.
    dantzig,
};

std::string to_string(Engine engine);
std::string to_string(LPStatus status);
Engine parse_engine(const std::string& text);

struct SimplexOptions {
    PivotRule rule = PivotRule::dantzig;
    std::size_t max_pivots = 5'000'000;
    /// Zero tolerance of the float engine.
    double tolerance = 1e-9;
};

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Engine engine = Engine::exact;
    /// Exact for the exact engine; snapped from the float optimum otherwise.
    Rational optimal_value;
    double optimal_value_float = 0;
    std::vector<Rational> primal;
    std::vector<double> primal_float;
    /// One multiplier per constraint row (exact engine). Together with `primal`
    /// this is an optimality certificate, see certificate_holds.
    std::vector<Rational> dual;
    /// Variables in the final basis.
    std::vector<std::size_t> basis;
    std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex. Phase one drives artificial variables out
/// of the basis; rows whose artificial cannot leave are redundant and stay
/// inert. Throws Error when the pivot budget is exhausted.
LPResult solve_lp(const LinearProgram& program, Engine engine = Engine::exact, const SimplexOptions& options = {});

/// Exact optimality proof: A x = b, x feasible, yᵀA >= c on nonnegative
/// variables, yᵀA = c on free ones, and c·x = yᵀb.
bool certificate_holds(const LinearProgram& program, const LPResult& result);

}  // namespace multiport
