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

#include "multiport_gpt/fock.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "multiport_gpt/errors.hpp"

namespace multiport {

OccupationState::OccupationState(std::vector<int> occupations) : occupations_(std::move(occupations)) {
    for (int n : occupations_) {
        if (n < 0) throw InvalidArgument("negative occupation in state " + label());
        total_ += n;
    }
}

bool OccupationState::is_fully_bunched() const {
    return std::count_if(occupations_.begin(), occupations_.end(), [](int n) { return n > 0; }) <= 1;
}

std::vector<int> OccupationState::partition() const {
    std::vector<int> p = occupations_;
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

std::string OccupationState::label() const {
    std::string s = "{";
    for (std::size_t i = 0; i < occupations_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(occupations_[i]);
    }
    return s + "}";
}

OccupationState OccupationState::concentrated(std::size_t modes, std::size_t mode, int count) {
    if (mode >= modes) throw InvalidArgument("mode index out of range");
    std::vector<int> occ(modes, 0);
    occ[mode] = count;
    return OccupationState(std::move(occ));
}

OccupationState parse_occupation_state(const std::string& text) {
    std::vector<int> occ;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            occ.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("malformed occupation state '" + text + "'");
        }
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '{' || c == '}' || c == '[' || c == ']') {
            flush();
        } else {
            token += c;
        }
    }
    flush();
    if (occ.empty()) throw ParseError("empty occupation state '" + text + "'");
    return OccupationState(std::move(occ));
}

bool canonical_less(const OccupationState& a, const OccupationState& b) {
    const auto pa = a.partition(), pb = b.partition();
    if (pa != pb) return pa > pb;
    return a.occupations() > b.occupations();
}

namespace {

void compositions(int remaining, std::size_t mode, int cap, std::vector<int>& current,
                  std::vector<OccupationState>& out) {
    if (mode + 1 == current.size()) {
        if (remaining > cap) return;
        current[mode] = remaining;
        out.emplace_back(current);
        return;
    }
    for (int n = std::min(remaining, cap); n >= 0; --n) {
        current[mode] = n;
        compositions(remaining - n, mode + 1, cap, current, out);
    }
    current[mode] = 0;
}

}  // namespace

StateSpace::StateSpace(int particle_count, int mode_count, bool pauli_exclusion)
    : particle_count_(particle_count), mode_count_(mode_count), pauli_exclusion_(pauli_exclusion) {
    if (mode_count < 1) throw InvalidArgument("mode count must be at least 1");
    if (particle_count < 0) throw InvalidArgument("particle count must be nonnegative");
    if (pauli_exclusion && particle_count > mode_count)
        throw InvalidArgument("Pauli exclusion admits at most one particle per mode (N=" +
                              std::to_string(particle_count) + " > K=" + std::to_string(mode_count) + ")");
    std::vector<int> current(static_cast<std::size_t>(mode_count), 0);
    compositions(particle_count, 0, pauli_exclusion ? 1 : particle_count, current, states_);
    std::sort(states_.begin(), states_.end(), canonical_less);
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::optional<std::size_t> StateSpace::find(const OccupationState& s) const {
    const auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t StateSpace::index_of(const OccupationState& s) const {
    if (auto i = find(s)) return *i;
    throw InvalidArgument("state " + s.label() + " is not in " + describe());
}

std::string StateSpace::describe() const {
    std::ostringstream os;
    os << "the " << (pauli_exclusion_ ? "Pauli-restricted " : "") << "state space of N=" << particle_count_
       << " particles on K=" << mode_count_ << " modes";
    return os.str();
}

SpacePtr enumerate_states(int particle_count, int mode_count, bool pauli_exclusion) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, bool>, SpacePtr> cache;
    const auto key = std::make_tuple(particle_count, mode_count, pauli_exclusion);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto space = std::make_shared<const StateSpace>(particle_count, mode_count, pauli_exclusion);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(space)).first->second;
}

std::uint64_t state_count(int particle_count, int mode_count, bool pauli_exclusion) {
    if (mode_count < 1) throw InvalidArgument("mode count must be at least 1");
    if (particle_count < 0) throw InvalidArgument("particle count must be nonnegative");
    // C(n, r) accumulated as an exact running product.
    auto binomial = [](std::uint64_t n, std::uint64_t r) {
        if (r > n) return std::uint64_t{0};
        r = std::min(r, n - r);
        std::uint64_t acc = 1;
        for (std::uint64_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
        return acc;
    };
    if (pauli_exclusion) return binomial(mode_count, particle_count);
    return binomial(static_cast<std::uint64_t>(mode_count + particle_count - 1), particle_count);
}

Distribution::Distribution(SpacePtr space, std::vector<Rational> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
    if (weights_.size() != space_->size())
        throw DimensionMismatch("distribution has " + std::to_string(weights_.size()) + " weights but " +
                                space_->describe() + " has " + std::to_string(space_->size()) + " states");
    Rational total = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (sgn(weights_[i]) < 0)
            throw InvalidArgument("negative weight " + to_string(weights_[i]) + " on " + (*space_)[i].label());
        total += weights_[i];
    }
    if (total != 1) throw InvalidArgument("distribution weights sum to " + to_string(total) + ", not 1");
}

Distribution Distribution::point_mass(SpacePtr space, const OccupationState& state) {
    std::vector<Rational> w(space->size());
    w[space->index_of(state)] = 1;
    return Distribution(std::move(space), std::move(w));
}

Distribution Distribution::uniform(SpacePtr space) {
    const Rational each = ratio(1, static_cast<long>(space->size()));
    std::vector<Rational> w(space->size(), each);
    return Distribution(std::move(space), std::move(w));
}

TransitionMatrix::TransitionMatrix(SpacePtr input_space, SpacePtr output_space, RationalMatrix entries)
    : input_(std::move(input_space)), output_(std::move(output_space)), entries_(std::move(entries)) {
    if (input_->mode_count() != output_->mode_count())
        throw DimensionMismatch("transition matrix input and output spaces have different mode counts");
    if (entries_.rows() != output_->size() || entries_.cols() != input_->size())
        throw DimensionMismatch("transition matrix is " + std::to_string(entries_.rows()) + "x" +
                                std::to_string(entries_.cols()) + " but the spaces need " +
                                std::to_string(output_->size()) + "x" + std::to_string(input_->size()));
}

TransitionMatrix TransitionMatrix::stochastic(SpacePtr input_space, SpacePtr output_space, RationalMatrix entries) {
    TransitionMatrix m(std::move(input_space), std::move(output_space), std::move(entries));
    for (std::size_t c = 0; c < m.entries_.cols(); ++c) {
        Rational total = 0;
        for (std::size_t r = 0; r < m.entries_.rows(); ++r) {
            if (sgn(m.entries_(r, c)) < 0)
                throw InvalidArgument("negative transition probability from " + (*m.input_)[c].label() + " to " +
                                      (*m.output_)[r].label());
            total += m.entries_(r, c);
        }
        if (total != 1)
            throw InvalidArgument("column for input " + (*m.input_)[c].label() + " sums to " + to_string(total));
    }
    return m;
}

TransitionMatrix TransitionMatrix::unchecked(SpacePtr input_space, SpacePtr output_space, RationalMatrix entries) {
    return TransitionMatrix(std::move(input_space), std::move(output_space), std::move(entries));
}

const Rational& TransitionMatrix::at(const OccupationState& out, const OccupationState& in) const {
    return entries_(output_->index_of(out), input_->index_of(in));
}

bool TransitionMatrix::is_column_stochastic() const {
    for (std::size_t c = 0; c < entries_.cols(); ++c) {
        Rational total = 0;
        for (std::size_t r = 0; r < entries_.rows(); ++r) {
            if (sgn(entries_(r, c)) < 0) return false;
            total += entries_(r, c);
        }
        if (total != 1) return false;
    }
    return true;
}

Distribution TransitionMatrix::column(std::size_t in) const { return Distribution(output_, entries_.column(in)); }

Distribution apply(const TransitionMatrix& matrix, const Distribution& dist) {
    if (!(*matrix.input_space() == *dist.space()))
        throw DimensionMismatch("cannot apply a matrix over " + matrix.input_space()->describe() +
                                " to a distribution over " + dist.space()->describe());
    const auto& w = dist.weights();
    return Distribution(matrix.output_space(), matrix.entries() * std::span<const Rational>(w));
}

TransitionMatrix compose(const TransitionMatrix& later, const TransitionMatrix& earlier) {
    if (!(*later.input_space() == *earlier.output_space()))
        throw DimensionMismatch("cannot compose: " + earlier.output_space()->describe() + " does not feed " +
                                later.input_space()->describe());
    return TransitionMatrix::unchecked(earlier.input_space(), later.output_space(),
                                       later.entries() * earlier.entries());
}

}  // namespace multiport
