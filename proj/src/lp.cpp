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

#include "multiport_gpt/lp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "multiport_gpt/errors.hpp"

namespace multiport {

std::string to_string(Engine engine) { return engine == Engine::exact ? "exact" : "float"; }

std::string to_string(LPStatus status) {
    switch (status) {
        case LPStatus::optimal: return "optimal";
        case LPStatus::infeasible: return "infeasible";
        case LPStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

Engine parse_engine(const std::string& text) {
    if (text == "exact") return Engine::exact;
    if (text == "float") return Engine::floating;
    throw ParseError("unknown engine '" + text + "' (expected exact or float)");
}

namespace {

struct ExactArith {
    static int sign(const Rational& x) { return sgn(x); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational convert(const Rational& x) { return x; }
    static void clean(Rational&) {}
    static int compare(const Rational& a, const Rational& b) { return cmp(a, b); }
    static Rational nonnegative(const Rational& x) { return x; }
};

struct FloatArith {
    static inline double tolerance = 1e-9;
    static int sign(double x) { return x > tolerance ? 1 : (x < -tolerance ? -1 : 0); }
    static bool is_zero(double x) { return x == 0.0; }
    static double convert(const Rational& x) { return x.get_d(); }
    static void clean(double& x) {
        if (std::fabs(x) < 1e-13) x = 0.0;
    }
    // Roundoff can leave a basic value slightly below zero.
    static double nonnegative(double x) { return x < 0.0 ? 0.0 : x; }
    static int compare(double a, double b) {
        const double slack = tolerance * std::max({1.0, std::fabs(a), std::fabs(b)});
        return a < b - slack ? -1 : (a > b + slack ? 1 : 0);
    }
};

enum class RunOutcome { optimal, unbounded };

template <class T, class Arith>
class Tableau {
public:
    // Columns: structural [0, n), artificial [n, n+m), rhs at n+m.
    Tableau(const std::vector<std::vector<T>>& a, const std::vector<T>& b, std::size_t n, const SimplexOptions& options)
        : m_(b.size()), n_(n), options_(options) {
        rows_.assign(m_, std::vector<T>(n_ + m_ + 1));
        row_sign_.assign(m_, 1);
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            row_sign_[i] = Arith::sign(b[i]) < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = row_sign_[i] < 0 ? T(-a[i][j]) : a[i][j];
            rows_[i][n_ + i] = T(1);
            rows_[i][rhs()] = row_sign_[i] < 0 ? T(-b[i]) : b[i];
            basis_[i] = n_ + i;
        }
    }

    std::size_t pivots() const { return pivots_; }

    /// Phase one. Returns false when the constraints are infeasible.
    bool find_feasible_basis() {
        cost_.assign(n_ + m_ + 1, T(0));
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) cost_[j] -= rows_[i][j];
            cost_[rhs()] -= rows_[i][rhs()];
        }
        run(/*allow_artificial=*/false);
        if (Arith::sign(cost_[rhs()]) < 0) return false;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (Arith::sign(rows_[i][j]) != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
        return true;
    }

    /// Phase two on objective c (maximize).
    RunOutcome optimize(const std::vector<T>& c) {
        cost_.assign(n_ + m_ + 1, T(0));
        for (std::size_t j = 0; j < n_; ++j) cost_[j] = T(-c[j]);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue;
            const T& cb = c[basis_[i]];
            if (Arith::is_zero(cb)) continue;
            for (std::size_t j = 0; j <= rhs(); ++j)
                if (!Arith::is_zero(rows_[i][j])) cost_[j] += cb * rows_[i][j];
        }
        return run(/*allow_artificial=*/false);
    }

    T objective_value() const { return cost_[rhs()]; }

    std::vector<T> primal() const {
        std::vector<T> x(n_, T(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rows_[i][rhs()];
        return x;
    }

    std::vector<T> dual() const {
        std::vector<T> y(m_);
        for (std::size_t i = 0; i < m_; ++i) y[i] = row_sign_[i] < 0 ? T(-cost_[n_ + i]) : cost_[n_ + i];
        return y;
    }

    std::vector<std::size_t> structural_basis() const {
        std::vector<std::size_t> out;
        for (std::size_t b : basis_)
            if (b < n_) out.push_back(b);
        return out;
    }

private:
    std::size_t rhs() const { return n_ + m_; }

    RunOutcome run(bool allow_artificial) {
        const std::size_t limit = allow_artificial ? n_ + m_ : n_;
        std::size_t degenerate_streak = 0;
        for (;;) {
            if (pivots_ >= options_.max_pivots)
                throw Error("simplex exceeded its budget of " + std::to_string(options_.max_pivots) + " pivots");
            const bool use_bland = options_.rule == PivotRule::bland || degenerate_streak > 50;
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < limit; ++j) {
                if (Arith::sign(cost_[j]) >= 0) continue;
                if (use_bland) {
                    entering = j;
                    break;
                }
                if (!entering || Arith::compare(cost_[j], cost_[*entering]) < 0) entering = j;
            }
            if (!entering) return RunOutcome::optimal;

            const std::size_t col = *entering;
            std::optional<std::size_t> leaving;
            T best_ratio{};
            for (std::size_t i = 0; i < m_; ++i) {
                if (Arith::sign(rows_[i][col]) <= 0) continue;
                T ratio = Arith::nonnegative(rows_[i][rhs()]) / rows_[i][col];
                const int order = leaving ? Arith::compare(ratio, best_ratio) : -1;
                if (order < 0 || (order == 0 && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (!leaving) return RunOutcome::unbounded;
            degenerate_streak = Arith::sign(best_ratio) == 0 ? degenerate_streak + 1 : 0;
            pivot(*leaving, col);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        ++pivots_;
        std::vector<T>& prow = rows_[r];
        const T pv = prow[c];
        nonzero_.clear();
        for (std::size_t j = 0; j <= rhs(); ++j) {
            if (Arith::is_zero(prow[j])) continue;
            prow[j] /= pv;
            Arith::clean(prow[j]);
            if (!Arith::is_zero(prow[j])) nonzero_.push_back(j);
        }
        auto eliminate = [&](std::vector<T>& row) {
            if (Arith::is_zero(row[c])) return;
            const T f = row[c];
            for (std::size_t j : nonzero_) {
                row[j] -= f * prow[j];
                Arith::clean(row[j]);
            }
            row[c] = T(0);
        };
        for (std::size_t i = 0; i < m_; ++i)
            if (i != r) eliminate(rows_[i]);
        eliminate(cost_);
        basis_[r] = c;
    }

    std::size_t m_;
    std::size_t n_;
    SimplexOptions options_;
    std::vector<std::vector<T>> rows_;
    std::vector<T> cost_;
    std::vector<int> row_sign_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> nonzero_;
    std::size_t pivots_ = 0;
};

// Free variables are split as x = x⁺ - x⁻; `origin` maps split columns back.
struct Expanded {
    std::vector<std::size_t> origin;
    std::vector<int> polarity;
};

Expanded expand_columns(const LinearProgram& p) {
    Expanded e;
    for (std::size_t j = 0; j < p.variable_count(); ++j) {
        e.origin.push_back(j);
        e.polarity.push_back(1);
        if (!p.is_nonnegative(j)) {
            e.origin.push_back(j);
            e.polarity.push_back(-1);
        }
    }
    return e;
}

template <class T, class Arith>
LPResult run_engine(const LinearProgram& p, const SimplexOptions& options, Engine engine) {
    const std::size_t m = p.rhs.size();
    const Expanded ex = expand_columns(p);
    const std::size_t n = ex.origin.size();
    std::vector<std::vector<T>> a(m, std::vector<T>(n));
    std::vector<T> b(m), c(n);
    for (std::size_t i = 0; i < m; ++i) {
        b[i] = Arith::convert(p.rhs[i]);
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = p.constraints(i, ex.origin[j]);
            a[i][j] = Arith::convert(ex.polarity[j] < 0 ? Rational(-v) : v);
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Rational& v = p.objective[ex.origin[j]];
        c[j] = Arith::convert(ex.polarity[j] < 0 ? Rational(-v) : v);
    }

    Tableau<T, Arith> tableau(a, b, n, options);
    LPResult result;
    result.engine = engine;
    if (!tableau.find_feasible_basis()) {
        result.status = LPStatus::infeasible;
        result.pivots = tableau.pivots();
        return result;
    }
    if (tableau.optimize(c) == RunOutcome::unbounded) {
        result.status = LPStatus::unbounded;
        result.pivots = tableau.pivots();
        return result;
    }
    result.status = LPStatus::optimal;
    result.pivots = tableau.pivots();
    const std::vector<T> x = tableau.primal();
    std::vector<T> folded(p.variable_count(), T(0));
    for (std::size_t j = 0; j < n; ++j) {
        if (ex.polarity[j] > 0)
            folded[ex.origin[j]] += x[j];
        else
            folded[ex.origin[j]] -= x[j];
    }
    for (std::size_t s : tableau.structural_basis()) result.basis.push_back(ex.origin[s]);

    if constexpr (std::is_same_v<T, Rational>) {
        result.optimal_value = tableau.objective_value();
        result.optimal_value_float = result.optimal_value.get_d();
        result.primal = folded;
        for (const auto& v : folded) result.primal_float.push_back(v.get_d());
        result.dual = tableau.dual();
    } else {
        result.optimal_value_float = tableau.objective_value();
        result.optimal_value = best_rational_approximation(result.optimal_value_float, 1'000'000);
        result.primal_float = folded;
    }
    return result;
}

}  // namespace

LPResult solve_lp(const LinearProgram& program, Engine engine, const SimplexOptions& options) {
    const std::size_t n = program.variable_count();
    if (program.constraints.rows() != program.rhs.size() || (program.constraints.rows() > 0 && program.constraints.cols() != n))
        throw DimensionMismatch("linear program: constraint matrix is " + std::to_string(program.constraints.rows()) +
                                "x" + std::to_string(program.constraints.cols()) + " for " + std::to_string(n) +
                                " variables and " + std::to_string(program.rhs.size()) + " right-hand sides");
    if (!program.nonnegative.empty() && program.nonnegative.size() != n)
        throw DimensionMismatch("linear program: nonnegativity flags do not match the variable count");
    if (engine == Engine::exact) return run_engine<Rational, ExactArith>(program, options, engine);
    FloatArith::tolerance = options.tolerance;
    return run_engine<double, FloatArith>(program, options, engine);
}

bool certificate_holds(const LinearProgram& program, const LPResult& result) {
    if (result.status != LPStatus::optimal || result.engine != Engine::exact) return false;
    const std::size_t n = program.variable_count(), m = program.rhs.size();
    if (result.primal.size() != n || result.dual.size() != m) return false;
    for (std::size_t i = 0; i < m; ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += program.constraints(i, j) * result.primal[j];
        if (lhs != program.rhs[i]) return false;
    }
    Rational primal_value = 0, dual_value = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (program.is_nonnegative(j) && sgn(result.primal[j]) < 0) return false;
        Rational reduced = -program.objective[j];
        for (std::size_t i = 0; i < m; ++i) reduced += result.dual[i] * program.constraints(i, j);
        if (program.is_nonnegative(j) ? sgn(reduced) < 0 : sgn(reduced) != 0) return false;
        primal_value += program.objective[j] * result.primal[j];
    }
    for (std::size_t i = 0; i < m; ++i) dual_value += result.dual[i] * program.rhs[i];
    return primal_value == dual_value && primal_value == result.optimal_value;
}

}  // namespace multiport
