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

#include "multiport_gpt/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "multiport_gpt/errors.hpp"
#include "multiport_gpt/rational_linalg.hpp"
#include "multiport_gpt/reduction.hpp"

namespace multiport {

namespace {

std::string level_name(int n) { return "S^(" + std::to_string(n) + ")"; }

void require_square(const TransitionMatrix& s, const char* what) {
    if (!s.is_square())
        throw DimensionMismatch(std::string(what) + " must map a state space to itself, got " +
                                s.input_space()->describe() + " -> " + s.output_space()->describe());
}

std::vector<Rational> product_weights(std::span<const Rational> q, const StateSpace& out) {
    std::vector<Rational> w(out.size());
    mpz_class n_fact;
    mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(out.particle_count()));
    for (std::size_t s = 0; s < out.size(); ++s) {
        Rational weight(n_fact);
        for (std::size_t k = 0; k < q.size(); ++k) {
            const int n_k = out[s][k];
            if (n_k == 0) continue;
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n_k));
            Rational power = 1;
            for (int i = 0; i < n_k; ++i) power *= q[k];
            weight *= power;
            weight /= Rational(f);
        }
        w[s] = weight;
    }
    return w;
}

mpz_class binomial2(int k) { return mpz_class(k) * (k - 1) / 2; }

}  // namespace

bool is_doubly_stochastic(const TransitionMatrix& s) {
    if (!s.is_square()) return false;
    const auto& e = s.entries();
    for (std::size_t i = 0; i < e.rows(); ++i) {
        Rational row = 0, col = 0;
        for (std::size_t j = 0; j < e.cols(); ++j) {
            if (sgn(e(i, j)) < 0) return false;
            row += e(i, j);
            col += e(j, i);
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

ConsistencyResult consistency_gap(const TransitionMatrix& s_n, const TransitionMatrix& s_m) {
    require_square(s_n, "S^(N)");
    require_square(s_m, "S^(M)");
    const int n = s_n.particle_count(), m = s_m.particle_count();
    if (s_n.mode_count() != s_m.mode_count())
        throw DimensionMismatch("consistency check across different mode counts (" + std::to_string(s_n.mode_count()) +
                                " vs " + std::to_string(s_m.mode_count()) + ")");
    if (s_n.input_space()->pauli_exclusion() != s_m.input_space()->pauli_exclusion())
        throw DimensionMismatch("consistency check mixes Pauli-restricted and unrestricted spaces");
    if (m >= n) throw DimensionMismatch("consistency needs M < N, got M=" + std::to_string(m) + ", N=" + std::to_string(n));
    const RationalMatrix d = deletion_chain(n, m, s_n.mode_count(), s_n.input_space()->pauli_exclusion()).entries();
    const RationalMatrix gap = d * s_n.entries() - s_m.entries() * d;
    ConsistencyResult result;
    result.lower_particles = m;
    for (const Rational& x : gap.data()) {
        const Rational mag = abs(x);
        if (mag > result.max_violation) result.max_violation = mag;
    }
    result.holds = sgn(result.max_violation) == 0;
    return result;
}

bool check_consistency(const TransitionMatrix& s_n, const TransitionMatrix& s_m, int mode_count) {
    if (s_n.mode_count() != mode_count || s_m.mode_count() != mode_count)
        throw DimensionMismatch("matrices are not over K=" + std::to_string(mode_count) + " modes");
    return consistency_gap(s_n, s_m).holds;
}

InducedMatrix induce_lower(const TransitionMatrix& s_n, int to_particles) {
    require_square(s_n, "S^(N)");
    const int n = s_n.particle_count();
    if (to_particles < 0 || to_particles >= n)
        throw InvalidArgument("can only induce a level below N=" + std::to_string(n));
    const bool pauli = s_n.input_space()->pauli_exclusion();
    const TransitionMatrix chain = deletion_chain(n, to_particles, s_n.mode_count(), pauli);
    const RationalMatrix& d = chain.entries();
    const RationalMatrix target = d * s_n.entries();

    std::vector<std::size_t> all_rows(d.rows());
    for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
    const auto pivots = pivot_columns(d);
    if (pivots.size() != d.rows())
        throw Error("reduction matrix D^(" + std::to_string(n) + "->" + std::to_string(to_particles) +
                    ") is rank deficient; the induced matrix is not unique");
    const auto inv = inverse(d.select(all_rows, pivots));
    const RationalMatrix x = target.select(all_rows, pivots) * *inv;

    InducedMatrix result;
    const RationalMatrix residual = x * d - target;
    for (std::size_t i = 0; i < residual.rows(); ++i) {
        for (std::size_t j = 0; j < residual.cols(); ++j) {
            if (sgn(residual(i, j)) != 0) {
                result.infeasibility = "no " + level_name(to_particles) + " satisfies S^(M) D = D S^(N): entry (" +
                                       (*chain.output_space())[i].label() + ", " + (*chain.input_space())[j].label() +
                                       ") is off by " + to_string(residual(i, j));
                return result;
            }
        }
    }
    result.matrix = TransitionMatrix::unchecked(chain.output_space(), chain.output_space(), x);
    return result;
}

double shannon_entropy(const Distribution& dist) {
    double h = 0;
    for (const Rational& w : dist.weights()) {
        if (sgn(w) == 0) continue;
        const double p = w.get_d();
        h -= p * std::log2(p);
    }
    return h;
}

bool is_composite(const Distribution& dist2) {
    const auto& space = *dist2.space();
    if (space.particle_count() != 2)
        throw InvalidArgument("compositeness is defined for two-particle distributions, got " + space.describe());
    const Distribution reduced =
        apply(deletion_matrix(2, space.mode_count(), space.pauli_exclusion()), dist2);
    auto is_point_mass = [](const Distribution& d) {
        return std::count_if(d.weights().begin(), d.weights().end(), [](const Rational& w) { return sgn(w) != 0; }) == 1;
    };
    // A point-mass reduction forces a point mass on some {2 e_k}, and a
    // point-mass distribution has H = 0 so it is composite iff its reduction
    // is a point mass too.
    if (is_point_mass(reduced)) return true;
    if (is_point_mass(dist2)) return false;
    return std::fabs(shannon_entropy(dist2) - 2 * shannon_entropy(reduced)) <= kEntropyTolerance;
}

Distribution symmetric_product(const Distribution& q, int particle_count) {
    const auto& in = *q.space();
    if (in.particle_count() != 1)
        throw InvalidArgument("symmetric product needs a single-particle distribution, got " + in.describe());
    if (particle_count < 0) throw InvalidArgument("particle count must be nonnegative");
    const SpacePtr out = enumerate_states(particle_count, in.mode_count());
    // Single-particle states e_1..e_K are canonically ordered by mode.
    return Distribution(out, product_weights(q.weights(), *out));
}

bool check_composite_principle(const TransitionMatrix& s2, const TransitionMatrix& s1) {
    require_square(s2, "S^(2)");
    require_square(s1, "S^(1)");
    if (s2.particle_count() != 2 || s1.particle_count() != 1)
        throw DimensionMismatch("composite principle compares S^(2) with S^(1), got " + level_name(s2.particle_count()) +
                                " and " + level_name(s1.particle_count()));
    const int k_modes = s2.mode_count();
    if (s1.mode_count() != k_modes) throw DimensionMismatch("S^(2) and S^(1) have different mode counts");
    if (s2.input_space()->pauli_exclusion()) return true;  // no doubly occupied inputs exist
    const auto& space2 = *s2.input_space();
    for (int k = 0; k < k_modes; ++k) {
        const std::size_t col1 = s1.input_space()->index_of(OccupationState::concentrated(k_modes, k, 1));
        const std::size_t col2 = space2.index_of(OccupationState::concentrated(k_modes, k, 2));
        const std::vector<Rational> q = s1.entries().column(col1);
        const std::vector<Rational> expected = product_weights(q, space2);
        if (s2.entries().column(col2) != expected) return false;
    }
    return true;
}

Rational bunching_probability(const TransitionMatrix& s, const OccupationState& input) {
    const std::size_t in = s.input_space()->index_of(input);
    const int n = s.output_space()->particle_count();
    const int k_modes = s.mode_count();
    Rational total = 0;
    if (n == 0) return s(0, in);
    for (int k = 0; k < k_modes; ++k)
        if (auto out = s.output_space()->find(OccupationState::concentrated(k_modes, k, n))) total += s(*out, in);
    return total;
}

Rational average_pair_bunching(const TransitionMatrix& s2) {
    require_square(s2, "S^(2)");
    if (s2.particle_count() != 2) throw InvalidArgument("pair bunching needs a two-particle matrix");
    const int k_modes = s2.mode_count();
    if (k_modes < 2) throw InvalidArgument("pair bunching needs at least two modes");
    Rational sum = 0;
    for (int a = 0; a < k_modes; ++a) {
        for (int b = a + 1; b < k_modes; ++b) {
            std::vector<int> occ(k_modes, 0);
            occ[a] = occ[b] = 1;
            sum += bunching_probability(s2, OccupationState(occ));
        }
    }
    return sum / Rational(binomial2(k_modes));
}

Rational pair_bunching_bound(const TransitionMatrix& s2) {
    const Rational average = average_pair_bunching(s2);
    if (s2.input_space()->pauli_exclusion()) return average;
    const int k_modes = s2.mode_count();
    Rational bunched_to_bunched = 0;
    for (int j = 0; j < k_modes; ++j)
        for (int k = 0; k < k_modes; ++k)
            bunched_to_bunched += s2.at(OccupationState::concentrated(k_modes, j, 2),
                                        OccupationState::concentrated(k_modes, k, 2));
    const Rational rewritten = (Rational(k_modes) - bunched_to_bunched) / Rational(binomial2(k_modes));
    return std::min(average, rewritten);
}

OccupationState default_bunching_input(int particle_count, int mode_count) {
    const SpacePtr space = enumerate_states(particle_count, mode_count);
    const auto last_class = space->states().back().partition();
    for (const auto& s : *space)
        if (s.partition() == last_class) return s;
    return space->states().back();
}

bool VerificationReport::passed() const {
    if (!doubly_stochastic) return false;
    for (const auto& c : consistency)
        if (!c.holds) return false;
    return composite_principle.value_or(true);
}

VerificationReport verify(const std::vector<TransitionMatrix>& family, const VerifyOptions& options) {
    if (family.empty()) throw InvalidArgument("cannot verify an empty family");
    std::map<int, const TransitionMatrix*> levels;
    const int k_modes = family.front().mode_count();
    const bool pauli = family.front().input_space()->pauli_exclusion();
    for (const auto& s : family) {
        require_square(s, level_name(s.particle_count()).c_str());
        if (s.mode_count() != k_modes) throw DimensionMismatch("family members have different mode counts");
        if (s.input_space()->pauli_exclusion() != pauli)
            throw DimensionMismatch("family mixes Pauli-restricted and unrestricted members");
        if (!levels.emplace(s.particle_count(), &s).second)
            throw InvalidArgument("family has two members for " + level_name(s.particle_count()));
    }

    VerificationReport report;
    for (const auto& [n, s] : levels) {
        if (!is_doubly_stochastic(*s)) {
            report.doubly_stochastic = false;
            report.notes.push_back(level_name(n) + " is not doubly stochastic");
        }
    }
    const auto& [top_n, top] = *levels.rbegin();
    for (const auto& [m, s] : levels) {
        if (m >= top_n) break;
        report.consistency.push_back(consistency_gap(*top, *s));
        if (!report.consistency.back().holds)
            report.notes.push_back("consistency " + level_name(top_n) + " vs " + level_name(m) +
                                   " fails, max violation " + to_string(report.consistency.back().max_violation));
    }

    if (options.composite) {
        const auto s1 = levels.find(1);
        const auto s2 = levels.find(2);
        if (s1 == levels.end()) {
            report.notes.push_back("composite principle not evaluated: family has no S^(1)");
        } else if (s2 != levels.end()) {
            report.composite_principle = check_composite_principle(*s2->second, *s1->second);
        } else if (top_n > 2) {
            const InducedMatrix induced = induce_lower(*top, 2);
            if (induced.feasible()) {
                report.composite_principle = check_composite_principle(*induced.matrix, *s1->second);
                report.notes.push_back("S^(2) induced from " + level_name(top_n) + " for the composite principle");
            } else {
                report.composite_principle = false;
                report.notes.push_back("composite principle: " + induced.infeasibility);
            }
        } else {
            report.notes.push_back("composite principle not evaluated: family has no S^(2)");
        }
        if (report.composite_principle == false) report.notes.push_back("composite principle violated");
    }
    return report;
}

}  // namespace multiport
