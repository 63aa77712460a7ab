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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "multiport_gpt/errors.hpp"
#include "multiport_gpt/fock.hpp"
#include "support.hpp"

using namespace multiport;
using multiport::testing::q;

namespace {

std::vector<std::string> labels(const StateSpace& space) {
    std::vector<std::string> out;
    for (const auto& s : space) out.push_back(s.label());
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

TEST_CASE("state counts") {
    CHECK(enumerate_states(2, 2)->size() == 3);
    CHECK(enumerate_states(3, 3)->size() == 10);
    CHECK(enumerate_states(3, 4)->size() == 20);
    for (int n = 0; n <= 6; ++n)
        for (int k = 1; k <= 6; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(state_count(n, k) == binomial(n + k - 1, n));
            CHECK(enumerate_states(n, k)->size() == state_count(n, k));
            if (n <= k)
                CHECK(enumerate_states(n, k, true)->size() == binomial(k, n));
            else
                CHECK_THROWS_AS(enumerate_states(n, k, true), InvalidArgument);
        }
}

TEST_CASE("canonical order: most bunched class first") {
    CHECK(labels(*enumerate_states(2, 2)) == std::vector<std::string>{"{2,0}", "{0,2}", "{1,1}"});
    CHECK(labels(*enumerate_states(3, 3)) ==
          std::vector<std::string>{"{3,0,0}", "{0,3,0}", "{0,0,3}", "{2,1,0}", "{2,0,1}", "{1,2,0}", "{1,0,2}",
                                   "{0,2,1}", "{0,1,2}", "{1,1,1}"});
    CHECK(labels(*enumerate_states(2, 4)).back() == "{0,0,1,1}");
    CHECK(labels(*enumerate_states(1, 3)) == std::vector<std::string>{"{1,0,0}", "{0,1,0}", "{0,0,1}"});
    CHECK(labels(*enumerate_states(0, 4)) == std::vector<std::string>{"{0,0,0,0}"});
    CHECK_THROWS_AS(enumerate_states(2, 0), InvalidArgument);
}

TEST_CASE("enumerated spaces are complete, unique and sorted") {
    for (int n = 0; n <= 5; ++n)
        for (int k = 1; k <= 5; ++k)
            for (bool pauli : {false, true}) {
                if (pauli && n > k) continue;
                const SpacePtr space = enumerate_states(n, k, pauli);
                std::set<OccupationState> seen;
                for (std::size_t i = 0; i < space->size(); ++i) {
                    const auto& s = (*space)[i];
                    CHECK(s.particle_count() == n);
                    CHECK(s.mode_count() == static_cast<std::size_t>(k));
                    if (pauli) CHECK(std::ranges::all_of(s.occupations(), [](int x) { return x <= 1; }));
                    CHECK(seen.insert(s).second);
                    CHECK(space->index_of(s) == i);
                    if (i > 0) CHECK(canonical_less((*space)[i - 1], s));
                }
            }
}

TEST_CASE("spaces are cached and compared by parameters") {
    CHECK(enumerate_states(3, 3).get() == enumerate_states(3, 3).get());
    CHECK(*enumerate_states(2, 3) == StateSpace(2, 3));
    CHECK_FALSE(*enumerate_states(2, 3) == *enumerate_states(2, 3, true));
}

TEST_CASE("occupation states") {
    const OccupationState s = parse_occupation_state("{2,0,1}");
    CHECK(s.particle_count() == 3);
    CHECK(s.label() == "{2,0,1}");
    CHECK(s.partition() == std::vector<int>{2, 1, 0});
    CHECK_FALSE(s.is_fully_bunched());
    CHECK(parse_occupation_state("0,3,0").is_fully_bunched());
    CHECK(OccupationState::concentrated(4, 2, 3).label() == "{0,0,3,0}");
    CHECK_THROWS_AS(parse_occupation_state("{1,-1}"), Error);
    CHECK_THROWS_AS(parse_occupation_state("{1,x}"), ParseError);
    CHECK_THROWS_AS(OccupationState({1, -2}), InvalidArgument);
}

TEST_CASE("lookups report the offending state") {
    const SpacePtr space = enumerate_states(2, 3);
    CHECK_FALSE(space->find(parse_occupation_state("{1,1,1}")).has_value());
    try {
        space->index_of(parse_occupation_state("{3,0,0}"));
        FAIL("expected a throw");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("{3,0,0}") != std::string::npos);
    }
}

TEST_CASE("distributions validate their weights") {
    const SpacePtr space = enumerate_states(2, 2);
    CHECK_NOTHROW(Distribution(space, {q("1/2"), q("1/4"), q("1/4")}));
    CHECK_THROWS_AS(Distribution(space, {q("1/2"), q("1/2")}), DimensionMismatch);
    CHECK_THROWS_AS(Distribution(space, {q("1/2"), q("1/4"), q("1/8")}), InvalidArgument);
    CHECK_THROWS_AS(Distribution(space, {q("3/2"), q("-1/4"), q("-1/4")}), InvalidArgument);
    const Distribution u = Distribution::uniform(space);
    for (const auto& w : u.weights()) CHECK(w == q("1/3"));
    const Distribution p = Distribution::point_mass(space, parse_occupation_state("{1,1}"));
    CHECK(p.weight(parse_occupation_state("{1,1}")) == 1);
    CHECK(p.weight(parse_occupation_state("{2,0}")) == 0);
}

TEST_CASE("stochastic matrices act on distributions and compose") {
    const SpacePtr space = enumerate_states(1, 2);
    RationalMatrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    RationalMatrix mix(2, 2, q("1/2"));
    const auto s = TransitionMatrix::stochastic(space, space, swap);
    const auto m = TransitionMatrix::stochastic(space, space, mix);
    const Distribution e0 = Distribution::point_mass(space, parse_occupation_state("{1,0}"));
    CHECK(apply(s, e0) == Distribution::point_mass(space, parse_occupation_state("{0,1}")));
    CHECK(apply(m, e0) == Distribution::uniform(space));
    CHECK(compose(m, s) == m);
    CHECK(compose(s, s).entries() == RationalMatrix::identity(2));

    RationalMatrix bad(2, 2);
    bad(0, 0) = 1;
    CHECK_THROWS_AS(TransitionMatrix::stochastic(space, space, bad), InvalidArgument);
    CHECK_THROWS_AS(TransitionMatrix::stochastic(space, enumerate_states(2, 2), swap), DimensionMismatch);
    CHECK_FALSE(TransitionMatrix::unchecked(space, space, bad).is_column_stochastic());
}

TEST_CASE("random distributions stay normalized under random stochastic maps") {
    std::mt19937_64 rng(7);
    const SpacePtr space = enumerate_states(3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix m(space->size(), space->size());
        for (std::size_t c = 0; c < space->size(); ++c) {
            const Distribution col = multiport::testing::random_distribution(space, rng, 40);
            for (std::size_t r = 0; r < space->size(); ++r) m(r, c) = col[r];
        }
        const auto s = TransitionMatrix::stochastic(space, space, m);
        const Distribution out = apply(s, multiport::testing::random_distribution(space, rng));
        Rational total;
        for (const auto& w : out.weights()) total += w;
        CHECK(total == 1);
    }
}
