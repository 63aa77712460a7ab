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

#include "multiport_gpt/fock.hpp"

namespace multiport {

/// Square, nonnegative, and every row and column sums exactly to 1.
bool is_doubly_stochastic(const TransitionMatrix& s);

struct ConsistencyResult {
    int lower_particles = 0;
    bool holds = false;
    /// Largest |(D S^(N) - S^(M) D)_ij|; zero iff the identity holds.
    Rational max_violation;
};

/// Evaluates D^(N→M) S^(N) = S^(M) D^(N→M) as an exact matrix identity.
ConsistencyResult consistency_gap(const TransitionMatrix& s_n, const TransitionMatrix& s_m);

/// The consistency condition for s_n (N particles) against s_m (M < N
/// particles) on `mode_count` modes. Throws DimensionMismatch otherwise.
bool check_consistency(const TransitionMatrix& s_n, const TransitionMatrix& s_m, int mode_count);

struct InducedMatrix {
    std::optional<TransitionMatrix> matrix;
    std::string infeasibility;

    bool feasible() const { return matrix.has_value(); }
};

/// Solves S^(M) D^(N→M) = D^(N→M) S^(N) for S^(M). The solution is unique
/// because D has full row rank; it is not guaranteed to be stochastic.
InducedMatrix induce_lower(const TransitionMatrix& s_n, int to_particles);

/// Shannon entropy in bits, 0 log 0 = 0.
double shannon_entropy(const Distribution& dist);

inline constexpr double kEntropyTolerance = 1e-10;

/// H(Π2) = 2 H(D^(2→1) Π2) for a two-particle distribution. Point masses are
/// decided exactly; other distributions compare float entropies.
bool is_composite(const Distribution& dist2);

/// Unordered product of N independent draws from the mode distribution q:
/// weight of {n_1..n_K} is (N! / Π n_i!) Π q_i^{n_i}.
Distribution symmetric_product(const Distribution& q, int particle_count);

/// For every doubly occupied input {2 e_k}, the column of s2 equals the
/// symmetric product of column e_k of s1.
bool check_composite_principle(const TransitionMatrix& s2, const TransitionMatrix& s1);

/// Σ_k s[{N e_k}][input].
Rational bunching_probability(const TransitionMatrix& s, const OccupationState& input);

/// Average bunching over the C(K,2) split inputs {e_a + e_b}.
Rational average_pair_bunching(const TransitionMatrix& s2);

/// min(average pair bunching, (K - Σ bunched→bunched) / C(K,2)). The two agree
/// for doubly stochastic s2; for K = 3 the second is 1 - Σ/3.
Rational pair_bunching_bound(const TransitionMatrix& s2);

/// Default bunching input: the first state of the most spread-out partition
/// class, i.e. {1,...,1,0,...,0} whenever K >= N.
OccupationState default_bunching_input(int particle_count, int mode_count);

struct VerifyOptions {
    bool composite = false;
};

struct VerificationReport {
    bool doubly_stochastic = true;
    std::vector<ConsistencyResult> consistency;
    std::optional<bool> composite_principle;
    std::vector<std::string> notes;

    bool passed() const;
};

/// Runs the axiom checks over a family S^(1..N) (any order, one matrix per
/// particle number, common K): double stochasticity of every member,
/// consistency of the largest member against each smaller one, and
/// optionally the composite principle on S^(2) and S^(1).
VerificationReport verify(const std::vector<TransitionMatrix>& family, const VerifyOptions& options = {});

}  // namespace multiport
