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
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "doctest.h"

#include "multiport_gpt/errors.hpp"
#include "multiport_gpt/lp.hpp"

using namespace multiport;

namespace {

// Doubly stochastic n x n matrices with objective sum_ij c_ij x_ij.
LinearProgram birkhoff(const std::vector<std::vector<long>>& cost) {
    const std::size_t n = cost.size();
    LinearProgram p;
    p.objective.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.objective[i * n + j] = Rational(cost[i][j]);
    p.constraints = RationalMatrix(2 * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            p.constraints(i, i * n + j) = 1;
            p.constraints(n + j, i * n + j) = 1;
        }
    p.rhs.assign(2 * n, Rational(1));
    return p;
}

long best_assignment(const std::vector<std::vector<long>>& cost) {
    std::vector<std::size_t> sigma(cost.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    long best = std::numeric_limits<long>::min();
    do {
        long total = 0;
        for (std::size_t i = 0; i < sigma.size(); ++i) total += cost[i][sigma[i]];
        best = std::max(best, total);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

LinearProgram make(std::vector<long> c, std::vector<std::vector<long>> a, std::vector<long> b) {
    LinearProgram p;
    for (long v : c) p.objective.emplace_back(v);
    p.constraints = RationalMatrix(a.size(), c.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) p.constraints(i, j) = a[i][j];
    for (long v : b) p.rhs.emplace_back(v);
    return p;
}

}  // namespace

TEST_CASE("maximum trace over the Birkhoff polytope") {
    const LPResult r = solve_lp(birkhoff({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(r.status == LPStatus::optimal);
    CHECK(r.optimal_value == 3);
    CHECK(certificate_holds(birkhoff({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), r));
}

TEST_CASE("Birkhoff optima are assignment optima") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> v(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        std::vector<std::vector<long>> cost(n, std::vector<long>(n));
        for (auto& row : cost)
            for (auto& x : row) x = v(rng);
        const LinearProgram p = birkhoff(cost);
        for (PivotRule rule : {PivotRule::bland, PivotRule::dantzig}) {
            SimplexOptions o;
            o.rule = rule;
            const LPResult exact = solve_lp(p, Engine::exact, o);
            REQUIRE(exact.status == LPStatus::optimal);
            CHECK(exact.optimal_value == best_assignment(cost));
            CHECK(certificate_holds(p, exact));
            const LPResult fl = solve_lp(p, Engine::floating, o);
            REQUIRE(fl.status == LPStatus::optimal);
            CHECK(std::abs(fl.optimal_value_float - static_cast<double>(best_assignment(cost))) < 1e-7);
        }
    }
}

TEST_CASE("infeasible and unbounded programs") {
    const LinearProgram infeasible = make({1, 1}, {{1, 1}, {1, 1}}, {1, 2});
    CHECK(solve_lp(infeasible).status == LPStatus::infeasible);
    CHECK(solve_lp(infeasible, Engine::floating).status == LPStatus::infeasible);
    const LinearProgram negative = make({1}, {{1}}, {-1});
    CHECK(solve_lp(negative).status == LPStatus::infeasible);
    const LinearProgram unbounded = make({1, 0}, {{1, -1}}, {0});
    CHECK(solve_lp(unbounded).status == LPStatus::unbounded);
    CHECK(solve_lp(unbounded, Engine::floating).status == LPStatus::unbounded);
}

TEST_CASE("free variables") {
    // maximize -x subject to x - y = 2, x >= 0, y free: optimum at x = 0, y = -2.
    LinearProgram p = make({-1, 0}, {{1, -1}}, {2});
    p.nonnegative = {true, false};
    const LPResult r = solve_lp(p);
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.optimal_value == 0);
    CHECK(r.primal == std::vector<Rational>{0, -2});
    CHECK(certificate_holds(p, r));
}

TEST_CASE("redundant equality rows and negative right-hand sides") {
    // x + y + z = 1 stated twice, -x = -1/2 ; maximize y.
    LinearProgram p = make({0, 1, 0}, {{1, 1, 1}, {1, 1, 1}, {-1, 0, 0}}, {1, 1, 0});
    p.rhs[2] = Rational(-1, 2);
    const LPResult r = solve_lp(p);
    REQUIRE(r.status == LPStatus::optimal);
    CHECK(r.optimal_value == Rational(1, 2));
    CHECK(certificate_holds(p, r));
}

TEST_CASE("certificates catch tampering") {
    const LinearProgram p = birkhoff({{3, 1, 2}, {0, 5, 1}, {2, 2, 4}});
    LPResult r = solve_lp(p);
    REQUIRE(certificate_holds(p, r));
    LPResult wrong_value = r;
    wrong_value.optimal_value += 1;
    CHECK_FALSE(certificate_holds(p, wrong_value));
    LPResult wrong_dual = r;
    wrong_dual.dual[0] -= 5;
    CHECK_FALSE(certificate_holds(p, wrong_dual));
    LPResult wrong_primal = r;
    wrong_primal.primal[0] += 1;
    CHECK_FALSE(certificate_holds(p, wrong_primal));
}

TEST_CASE("engine names") {
    CHECK(parse_engine("exact") == Engine::exact);
    CHECK(parse_engine("float") == Engine::floating);
    CHECK(to_string(Engine::floating) == "float");
    CHECK_THROWS_AS(parse_engine("interior"), ParseError);
    CHECK(to_string(LPStatus::infeasible) == "infeasible");
}
