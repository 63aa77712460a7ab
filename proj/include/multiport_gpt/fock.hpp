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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multiport_gpt/rational.hpp"

namespace multiport {

/// Particle counts per mode, {n_1, ..., n_K}.
class OccupationState {
public:
    OccupationState() = default;
    explicit OccupationState(std::vector<int> occupations);

    int particle_count() const { return total_; }
    std::size_t mode_count() const { return occupations_.size(); }
    int operator[](std::size_t mode) const { return occupations_[mode]; }
    const std::vector<int>& occupations() const { return occupations_; }

    /// True when every particle sits in a single mode ({N·e_k}).
    bool is_fully_bunched() const;
    /// Occupations sorted in descending order; identifies the partition class.
    std::vector<int> partition() const;
    /// "{2,1,0}"
    std::string label() const;

    /// `count` particles in `mode`, none elsewhere.
    static OccupationState concentrated(std::size_t modes, std::size_t mode, int count);

    bool operator==(const OccupationState& other) const { return occupations_ == other.occupations_; }
    auto operator<=>(const OccupationState& other) const { return occupations_ <=> other.occupations_; }

private:
    std::vector<int> occupations_;
    int total_ = 0;
};

/// Parses "1,1,1", "{1,1,1}" or "1 1 1".
OccupationState parse_occupation_state(const std::string& text);

/// Canonical order: partition classes in descending lexicographic order of the
/// sorted occupations, then descending lexicographic order within a class.
bool canonical_less(const OccupationState& a, const OccupationState& b);

/// Every occupation state of N particles over K modes, canonically ordered.
/// With `pauli_exclusion` only states with occupations <= 1 are kept.
class StateSpace {
public:
    StateSpace(int particle_count, int mode_count, bool pauli_exclusion = false);

    int particle_count() const { return particle_count_; }
    int mode_count() const { return mode_count_; }
    bool pauli_exclusion() const { return pauli_exclusion_; }
    std::size_t size() const { return states_.size(); }

    const OccupationState& operator[](std::size_t i) const { return states_[i]; }
    const std::vector<OccupationState>& states() const { return states_; }
    auto begin() const { return states_.begin(); }
    auto end() const { return states_.end(); }

    std::optional<std::size_t> find(const OccupationState& s) const;
    /// Throws InvalidArgument naming the state when it is not in the space.
    std::size_t index_of(const OccupationState& s) const;

    /// Same (N, K, exclusion) triple; the state lists then coincide.
    bool operator==(const StateSpace& other) const {
        return particle_count_ == other.particle_count_ && mode_count_ == other.mode_count_ &&
               pauli_exclusion_ == other.pauli_exclusion_;
    }

    std::string describe() const;

private:
    int particle_count_;
    int mode_count_;
    bool pauli_exclusion_;
    std::vector<OccupationState> states_;
    std::map<OccupationState, std::size_t> index_;
};

using SpacePtr = std::shared_ptr<const StateSpace>;

/// Shared, cached state space. Throws InvalidArgument on K = 0 or N < 0, and
/// on N > K under Pauli exclusion.
SpacePtr enumerate_states(int particle_count, int mode_count, bool pauli_exclusion = false);

/// d = (K+N-1)! / (N! (K-1)!), or C(K, N) under Pauli exclusion.
std::uint64_t state_count(int particle_count, int mode_count, bool pauli_exclusion = false);

/// Exact probability vector over a state space.
class Distribution {
public:
    /// Throws InvalidArgument unless the weights are nonnegative and sum to 1.
    Distribution(SpacePtr space, std::vector<Rational> weights);

    static Distribution point_mass(SpacePtr space, const OccupationState& state);
    static Distribution uniform(SpacePtr space);

    const SpacePtr& space() const { return space_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& operator[](std::size_t i) const { return weights_[i]; }
    const Rational& weight(const OccupationState& s) const { return weights_[space_->index_of(s)]; }

    bool operator==(const Distribution& other) const {
        return *space_ == *other.space_ && weights_ == other.weights_;
    }

private:
    SpacePtr space_;
    std::vector<Rational> weights_;
};

/// Rational matrix from distributions over `input_space` to distributions over
/// `output_space`; column = input state, row = output state, so the entry
/// (x, y) is the probability of turning state y into state x.
class TransitionMatrix {
public:
    /// Validated construction: entries nonnegative and columns summing to 1.
    static TransitionMatrix stochastic(SpacePtr input_space, SpacePtr output_space, RationalMatrix entries);
    /// Only shape is checked. Used for candidates that are still to be verified.
    static TransitionMatrix unchecked(SpacePtr input_space, SpacePtr output_space, RationalMatrix entries);

    const SpacePtr& input_space() const { return input_; }
    const SpacePtr& output_space() const { return output_; }
    const RationalMatrix& entries() const { return entries_; }
    bool is_square() const { return *input_ == *output_; }
    int particle_count() const { return input_->particle_count(); }
    int mode_count() const { return input_->mode_count(); }

    const Rational& operator()(std::size_t out, std::size_t in) const { return entries_(out, in); }
    const Rational& at(const OccupationState& out, const OccupationState& in) const;

    bool is_column_stochastic() const;
    Distribution column(std::size_t in) const;

    bool operator==(const TransitionMatrix& other) const {
        return *input_ == *other.input_ && *output_ == *other.output_ && entries_ == other.entries_;
    }

private:
    TransitionMatrix(SpacePtr input_space, SpacePtr output_space, RationalMatrix entries);

    SpacePtr input_;
    SpacePtr output_;
    RationalMatrix entries_;
};

/// Π_f = S Π_i, exactly. Throws DimensionMismatch when the spaces differ.
Distribution apply(const TransitionMatrix& matrix, const Distribution& dist);

/// Composition `later ∘ earlier` (matrix product later · earlier).
TransitionMatrix compose(const TransitionMatrix& later, const TransitionMatrix& earlier);

}  // namespace multiport
