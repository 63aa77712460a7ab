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

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"

#include "multiport_gpt/constraints.hpp"
#include "multiport_gpt/errors.hpp"
#include "multiport_gpt/multiport.hpp"
#include "multiport_gpt/optimizer.hpp"
#include "multiport_gpt/reduction.hpp"
#include "support.hpp"

using namespace multiport;
using multiport::testing::load_family;
using multiport::testing::load_matrix;
using multiport::testing::q;
using multiport::testing::random_distribution;

namespace {

OccupationState st(const char* text) { return parse_occupation_state(text); }

TransitionMatrix boson(const char* name, int n) {
    return build_transition_matrix(builtin_unitary(name), n, ParticleKind::boson);
}

// Distribution-level form of consistency: D S_N p == S_M D p for this p.
bool consistent_on(const TransitionMatrix& s_n, const TransitionMatrix& s_m, const Distribution& p) {
    const TransitionMatrix d = deletion_chain(s_n.particle_count(), s_m.particle_count(), s_n.mode_count());
    return apply(d, apply(s_n, p)) == apply(s_m, apply(d, p));
}

}  // namespace

TEST_CASE("superquantum tritter satisfies the framework axioms") {
    const TransitionMatrix s3 = load_matrix("superquantum_tritter_3p.json");
    CHECK(is_doubly_stochastic(s3));
    CHECK(check_consistency(s3, uniform_single_particle(3), 3));
    CHECK(bunching_probability(s3, st("{1,1,1}")) == q("3/4"));

    const auto family = load_family("superquantum_tritter_family.json");
    const VerificationReport plain = verify(family);
    CHECK(plain.passed());
    CHECK_FALSE(plain.composite_principle.has_value());
    const VerificationReport strict = verify(family, VerifyOptions{true});
    REQUIRE(strict.composite_principle.has_value());
    CHECK_FALSE(*strict.composite_principle);
    CHECK_FALSE(strict.passed());
    CHECK_FALSE(check_composite_principle(family[1], family[0]));

    // S^(1) and S^(3) alone: S^(2) is induced for the composite check.
    const VerificationReport induced = verify({family[0], family[2]}, VerifyOptions{true});
    REQUIRE(induced.composite_principle.has_value());
    CHECK_FALSE(*induced.composite_principle);
}

TEST_CASE("induced lower levels") {
    const auto family = load_family("superquantum_tritter_family.json");
    const InducedMatrix s2 = induce_lower(family[2], 2);
    REQUIRE(s2.feasible());
    CHECK(*s2.matrix == family[1]);
    const InducedMatrix s1 = induce_lower(family[2], 1);
    REQUIRE(s1.feasible());
    CHECK(*s1.matrix == uniform_single_particle(3));

    const TransitionMatrix t3 = boson("tritter", 3);
    const InducedMatrix t2 = induce_lower(t3, 2);
    REQUIRE(t2.feasible());
    CHECK(*t2.matrix == boson("tritter", 2));

    // Swapping {1,1,1} with {3,0,0} breaks consistency at every level.
    const SpacePtr space = enumerate_states(3, 3);
    RationalMatrix swap = RationalMatrix::identity(space->size());
    const std::size_t a = space->index_of(st("{1,1,1}")), b = space->index_of(st("{3,0,0}"));
    swap(a, a) = swap(b, b) = 0;
    swap(a, b) = swap(b, a) = 1;
    const InducedMatrix bad = induce_lower(TransitionMatrix::stochastic(space, space, swap), 1);
    CHECK_FALSE(bad.feasible());
    CHECK_FALSE(bad.infeasibility.empty());
    CHECK_THROWS_AS(induce_lower(t3, 3), InvalidArgument);
}

TEST_CASE("matrix identity and distribution-level consistency agree") {
    std::mt19937_64 rng(99);
    const TransitionMatrix t3 = boson("tritter", 3);
    const TransitionMatrix t2 = boson("tritter", 2);
    const TransitionMatrix t1 = boson("tritter", 1);
    const TransitionMatrix sq3 = load_matrix("superquantum_tritter_3p.json");
    const auto family = load_family("superquantum_tritter_family.json");

    struct Pair {
        const TransitionMatrix* upper;
        const TransitionMatrix* lower;
    };
    const std::vector<Pair> pairs = {{&t3, &t2}, {&t3, &t1}, {&sq3, &family[1]}, {&sq3, &t1},
                                     {&sq3, &t2}, {&t3, &family[1]}};
    for (const auto& [upper, lower] : pairs) {
        const bool identity = check_consistency(*upper, *lower, 3);
        bool every = true;
        for (int trial = 0; trial < 100; ++trial)
            every = consistent_on(*upper, *lower, random_distribution(upper->input_space(), rng, 30)) && every;
        CHECK(identity == every);
    }
    CHECK_FALSE(check_consistency(sq3, t2, 3));
    CHECK(consistency_gap(sq3, t2).max_violation > 0);
    CHECK(consistency_gap(t3, t2).max_violation == 0);
}

TEST_CASE("entropy") {
    const SpacePtr space = enumerate_states(1, 3);
    CHECK(std::abs(shannon_entropy(Distribution::uniform(space)) - std::log2(3.0)) < 1e-12);
    CHECK(shannon_entropy(Distribution::point_mass(space, st("{0,1,0}"))) == 0.0);
}

TEST_CASE("compositeness holds only for fully bunched point masses") {
    std::mt19937_64 rng(1234);
    for (int k = 2; k <= 4; ++k) {
        const SpacePtr space = enumerate_states(2, k);
        for (const auto& s : *space) CHECK(is_composite(Distribution::point_mass(space, s)) == s.is_fully_bunched());
    }
    int composite = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 2 + trial % 3;
        const SpacePtr space = enumerate_states(2, k);
        const Distribution d = random_distribution(space, rng, 80);
        int support = 0;
        for (const auto& w : d.weights()) support += w != 0;
        const bool bunched_point = support == 1 && [&] {
            for (std::size_t i = 0; i < space->size(); ++i)
                if (d[i] != 0) return (*space)[i].is_fully_bunched();
            return false;
        }();
        CHECK(is_composite(d) == bunched_point);
        composite += is_composite(d);
    }
    CHECK(composite > 0);
    CHECK_THROWS_AS(is_composite(Distribution::uniform(enumerate_states(3, 3))), InvalidArgument);
}

TEST_CASE("symmetric products") {
    const SpacePtr one = enumerate_states(1, 2);
    const Distribution half = Distribution::uniform(one);
    const Distribution p = symmetric_product(half, 2);
    CHECK(p.weight(st("{2,0}")) == q("1/4"));
    CHECK(p.weight(st("{0,2}")) == q("1/4"));
    CHECK(p.weight(st("{1,1}")) == q("1/2"));
    const Distribution third = symmetric_product(Distribution::uniform(enumerate_states(1, 3)), 2);
    for (const auto& s : *third.space()) CHECK(third.weight(s) == (s.is_fully_bunched() ? q("1/9") : q("2/9")));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + trial % 4, n = 1 + trial % 3;
        const Distribution single = random_distribution(enumerate_states(1, k), rng, 30);
        const Distribution prod = symmetric_product(single, n);
        Rational total;
        for (const auto& w : prod.weights()) {
            CHECK(w >= 0);
            total += w;
        }
        CHECK(total == 1);
        // Deleting a particle from an i.i.d. product gives back the marginal.
        if (n >= 2) CHECK(apply(deletion_matrix(n, k), prod) == symmetric_product(single, n - 1));
        if (n == 1) CHECK(prod == single);
    }
}

TEST_CASE("quantum families satisfy the composite principle") {
    for (const char* name : {"bs:1/2", "tritter", "fourier:4", "grover:4"})
        CHECK(check_composite_principle(boson(name, 2), boson(name, 1)));
    CHECK(check_composite_principle(boson("bs:1/3", 2), boson("bs:1/3", 1)));
    CHECK_FALSE(check_composite_principle(load_family("superquantum_tritter_family.json")[1], boson("tritter", 1)));
}

TEST_CASE("every quantum family passes verification") {
    for (const char* name : {"bs:1/2", "bs:1/3", "tritter", "fourier:3", "fourier:4", "grover:4"}) {
        const UnitaryMultiport u = builtin_unitary(name);
        for (ParticleKind kind : {ParticleKind::boson, ParticleKind::fermion}) {
            const int top = kind == ParticleKind::fermion ? std::min<int>(3, static_cast<int>(u.dimension())) : 3;
            std::vector<TransitionMatrix> family;
            for (int n = 1; n <= top; ++n) family.push_back(build_transition_matrix(u, n, kind));
            CAPTURE(name);
            CAPTURE(to_string(kind));
            const VerificationReport report = verify(family, VerifyOptions{true});
            CHECK(report.passed());
            if (kind == ParticleKind::boson && top >= 2) CHECK(report.composite_principle == true);
        }
    }
}

TEST_CASE("bunching bounds") {
    for (int k = 3; k <= 5; ++k) CHECK(boson_pair_bunching_average(builtin_unitary("fourier:" + std::to_string(k))) == ratio(2, k));
    for (const char* name : {"tritter", "fourier:4", "grover:4", "bs:1/2"}) {
        const TransitionMatrix s2 = boson(name, 2);
        const long k = static_cast<long>(s2.mode_count());
        CHECK(average_pair_bunching(s2) == ratio(2, k));
        CHECK(pair_bunching_bound(s2) == ratio(2, k));
    }
    // Three-particle bunching is bounded by the average pair bunching of the
    // induced two-particle matrix.
    const auto family = load_family("superquantum_tritter_family.json");
    CHECK(bunching_probability(family[2], st("{1,1,1}")) <= pair_bunching_bound(family[1]));
    CHECK(pair_bunching_bound(family[1]) == q("3/4"));
    const TransitionMatrix t3 = boson("tritter", 3);
    CHECK(bunching_probability(t3, st("{1,1,1}")) <= pair_bunching_bound(boson("tritter", 2)));
    CHECK(default_bunching_input(3, 4) == st("{1,1,1,0}"));
    CHECK(default_bunching_input(2, 3) == st("{1,1,0}"));
}

TEST_CASE("printed superquantum 4-port") {
    const TransitionMatrix s = load_matrix("superquantum_4port_3p.json");
    CHECK(is_doubly_stochastic(s));
    std::set<std::string> values;
    for (std::size_t i = 0; i < s.output_space()->size(); ++i)
        for (std::size_t j = 0; j < s.input_space()->size(); ++j) values.insert(to_string(s(i, j)));
    CHECK(values == std::set<std::string>{"3/32", "3/64", "1/64", "1/96", "13/192", "7/192", "1/8", "0"});
    CHECK(check_consistency(s, uniform_single_particle(4), 4));
    CHECK(bunching_probability(s, st("{1,1,1,0}")) == q("1/16"));
    const auto transposed = TransitionMatrix::stochastic(s.output_space(), s.input_space(), s.entries().transpose());
    CHECK(bunching_probability(transposed, st("{1,1,1,0}")) == q("1/2"));
    CHECK(check_consistency(transposed, uniform_single_particle(4), 4));
    // Neither orientation admits a consistent two-particle matrix.
    CHECK_FALSE(induce_lower(s, 2).feasible());
    CHECK_FALSE(induce_lower(transposed, 2).feasible());
}
