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

#include "multiport_gpt/multiport.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "multiport_gpt/errors.hpp"
#include "multiport_gpt/permanent.hpp"

namespace multiport {

std::string to_string(ParticleKind kind) {
    switch (kind) {
        case ParticleKind::boson: return "boson";
        case ParticleKind::fermion: return "fermion";
        case ParticleKind::distinguishable: return "distinguishable";
    }
    return "unknown";
}

ParticleKind parse_particle_kind(std::string_view text) {
    if (text == "boson") return ParticleKind::boson;
    if (text == "fermion") return ParticleKind::fermion;
    if (text == "distinguishable") return ParticleKind::distinguishable;
    throw ParseError("unknown particle kind '" + std::string(text) + "'");
}

GaussianRational exact_determinant(Matrix<GaussianRational> m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    GaussianRational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return GaussianRational{};
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = GaussianRational{} - det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            const GaussianRational f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

namespace {

std::optional<GaussianForm> detect_gaussian_form(const ComplexMatrix& u) {
    const auto k = static_cast<std::int64_t>(u.rows());
    for (std::int64_t scale : {std::int64_t{1}, k, k * k}) {
        const double root = std::sqrt(static_cast<double>(scale));
        Matrix<GaussianRational> g(u.rows(), u.cols());
        bool ok = true;
        for (std::size_t r = 0; r < u.rows() && ok; ++r) {
            for (std::size_t c = 0; c < u.cols() && ok; ++c) {
                const double x = u(r, c).real() * root, y = u(r, c).imag() * root;
                const double rx = std::round(x), ry = std::round(y);
                if (std::fabs(x - rx) > 1e-9 || std::fabs(y - ry) > 1e-9) {
                    ok = false;
                    break;
                }
                g(r, c) = GaussianRational(Rational(static_cast<long>(rx)), Rational(static_cast<long>(ry)));
            }
        }
        if (!ok) continue;
        // G G† must be scale·1 exactly.
        for (std::size_t i = 0; i < g.rows() && ok; ++i) {
            for (std::size_t j = 0; j < g.rows() && ok; ++j) {
                GaussianRational acc;
                for (std::size_t c = 0; c < g.cols(); ++c)
                    acc += g(i, c) * GaussianRational(g(j, c).re, -g(j, c).im);
                const GaussianRational expected = i == j ? GaussianRational(static_cast<int>(scale)) : GaussianRational{};
                ok = acc == expected;
            }
        }
        if (ok) return GaussianForm{std::move(g), scale};
    }
    return std::nullopt;
}

void check_states(const UnitaryMultiport& u, const OccupationState& input, const OccupationState& output) {
    if (input.mode_count() != u.dimension() || output.mode_count() != u.dimension())
        throw DimensionMismatch("states " + input.label() + " and " + output.label() + " do not match a " +
                                std::to_string(u.dimension()) + "-port");
    if (input.particle_count() != output.particle_count())
        throw InvalidArgument("particle number mismatch between " + input.label() + " and " + output.label());
}

std::vector<std::size_t> repeated_modes(const OccupationState& s) {
    std::vector<std::size_t> ids;
    for (std::size_t k = 0; k < s.mode_count(); ++k)
        for (int c = 0; c < s[k]; ++c) ids.push_back(k);
    return ids;
}

bool has_multiple_occupation(const OccupationState& s) {
    for (int n : s.occupations())
        if (n > 1) return true;
    return false;
}

double factorial_product(const OccupationState& s) {
    double f = 1;
    for (int n : s.occupations())
        for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

mpz_class exact_factorial_product(const OccupationState& s) {
    mpz_class f = 1;
    for (int n : s.occupations()) {
        mpz_class t;
        mpz_fac_ui(t.get_mpz_t(), static_cast<unsigned long>(n));
        f *= t;
    }
    return f;
}

void check_cap(int n) {
    const int cap = permanent_size_cap();
    if (n > cap)
        throw PermanentTooLarge("transition probability for N=" + std::to_string(n) + " exceeds the permanent cap of " +
                                std::to_string(cap));
}

Complex clean(Complex z) {
    auto snap = [](double x) { return std::fabs(x) < 1e-15 ? 0.0 : x; };
    return {snap(z.real()), snap(z.imag())};
}

int parse_positive(std::string_view text, std::string_view descriptor) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(std::string(text), &used);
        if (used == text.size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("malformed multiport size in '" + std::string(descriptor) + "'");
}

}  // namespace

UnitaryMultiport::UnitaryMultiport(ComplexMatrix amplitudes, std::string name)
    : amplitudes_(std::move(amplitudes)), name_(std::move(name)) {
    if (!amplitudes_.is_square() || amplitudes_.rows() == 0)
        throw InvalidArgument("a multiport needs a non-empty square amplitude matrix");
    const std::size_t n = amplitudes_.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc = 0;
            for (std::size_t c = 0; c < n; ++c) acc += amplitudes_(i, c) * std::conj(amplitudes_(j, c));
            const double target = i == j ? 1.0 : 0.0;
            if (std::abs(acc - target) > kUnitarityTolerance) {
                std::ostringstream os;
                os << "matrix '" << name_ << "' is not unitary: (U U^dagger)(" << i << "," << j << ") = " << acc;
                throw InvalidArgument(os.str());
            }
        }
    }
    exact_ = detect_gaussian_form(amplitudes_);
}

UnitaryMultiport beamsplitter(double transmissivity) {
    if (!(transmissivity >= 0.0 && transmissivity <= 1.0))
        throw InvalidArgument("beamsplitter transmissivity must lie in [0, 1]");
    const double t = std::sqrt(transmissivity), r = std::sqrt(1.0 - transmissivity);
    ComplexMatrix u(2, 2);
    u(0, 0) = t;
    u(1, 1) = t;
    u(0, 1) = Complex(0, r);
    u(1, 0) = Complex(0, r);
    std::ostringstream name;
    name << "bs:" << transmissivity;
    return UnitaryMultiport(std::move(u), name.str());
}

UnitaryMultiport tritter() {
    const double norm = 1.0 / std::sqrt(3.0);
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    ComplexMatrix u(3, 3, Complex(norm, 0));
    for (std::size_t j = 0; j < 3; ++j) u(j, j) = norm * omega;
    return UnitaryMultiport(std::move(u), "tritter");
}

UnitaryMultiport fourier(int n) {
    if (n < 1) throw InvalidArgument("fourier multiport needs n >= 1");
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexMatrix u(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            u(j, k) = clean(norm * std::polar(1.0, 2.0 * std::numbers::pi * ((j * k) % n) / n));
    return UnitaryMultiport(std::move(u), "fourier:" + std::to_string(n));
}

UnitaryMultiport grover(int n) {
    if (n < 1) throw InvalidArgument("grover multiport needs n >= 1");
    const double off = 2.0 / n;
    ComplexMatrix u(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Complex(off, 0));
    for (int j = 0; j < n; ++j) u(j, j) = off - 1.0;
    return UnitaryMultiport(std::move(u), "grover:" + std::to_string(n));
}

UnitaryMultiport builtin_unitary(std::string_view descriptor) {
    const auto colon = descriptor.find(':');
    const std::string_view head = descriptor.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : descriptor.substr(colon + 1);
    if (head == "tritter" && arg.empty()) return tritter();
    if ((head == "bs" || head == "beamsplitter") && !arg.empty()) {
        double t = 0;
        try {
            if (arg.find('/') != std::string_view::npos) {
                t = parse_rational(arg).get_d();
            } else {
                std::size_t used = 0;
                t = std::stod(std::string(arg), &used);
                if (used != arg.size()) throw ParseError("trailing text");
            }
        } catch (const std::exception&) {
            throw ParseError("malformed transmissivity in '" + std::string(descriptor) + "'");
        }
        return beamsplitter(t);
    }
    if (head == "fourier" && !arg.empty()) return fourier(parse_positive(arg, descriptor));
    if (head == "grover" && !arg.empty()) return grover(parse_positive(arg, descriptor));
    throw ParseError("unknown unitary '" + std::string(descriptor) + "' (expected bs:T, tritter, fourier:n, grover:n)");
}

bool is_symmetric_multiport(const UnitaryMultiport& u) {
    const double target = 1.0 / std::sqrt(static_cast<double>(u.dimension()));
    for (const Complex& z : u.amplitudes().data())
        if (std::fabs(std::abs(z) - target) > kUnitarityTolerance) return false;
    return true;
}

double transition_probability(const UnitaryMultiport& u, const OccupationState& input, const OccupationState& output,
                              ParticleKind kind) {
    check_states(u, input, output);
    const int n = input.particle_count();
    if (n == 0) return 1.0;
    check_cap(n);
    const auto rows = repeated_modes(output), cols = repeated_modes(input);
    switch (kind) {
        case ParticleKind::boson: {
            const Complex p = permanent(u.amplitudes().select(rows, cols));
            return std::norm(p) / (factorial_product(input) * factorial_product(output));
        }
        case ParticleKind::fermion: {
            if (has_multiple_occupation(input) || has_multiple_occupation(output)) return 0.0;
            return std::norm(determinant(u.amplitudes().select(rows, cols)));
        }
        case ParticleKind::distinguishable: {
            Matrix<double> m(rows.size(), cols.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = std::norm(u(rows[i], cols[j]));
            return ryser_permanent(m) / factorial_product(output);
        }
    }
    return 0.0;
}

Rational exact_transition_probability(const UnitaryMultiport& u, const OccupationState& input,
                                      const OccupationState& output, ParticleKind kind) {
    check_states(u, input, output);
    const auto& form = u.gaussian_form();
    if (!form) throw InvalidArgument("multiport '" + u.name() + "' has no exact Gaussian representation");
    const int n = input.particle_count();
    if (n == 0) return 1;
    check_cap(n);
    const auto rows = repeated_modes(output), cols = repeated_modes(input);
    mpz_class scale_power;
    mpz_ui_pow_ui(scale_power.get_mpz_t(), static_cast<unsigned long>(form->scale), static_cast<unsigned long>(n));
    Rational result;
    switch (kind) {
        case ParticleKind::boson: {
            const GaussianRational p = ryser_permanent(form->integers.select(rows, cols));
            result = p.norm() / Rational(scale_power * exact_factorial_product(input) * exact_factorial_product(output));
            break;
        }
        case ParticleKind::fermion: {
            if (has_multiple_occupation(input) || has_multiple_occupation(output)) return 0;
            result = exact_determinant(form->integers.select(rows, cols)).norm() / Rational(scale_power);
            break;
        }
        case ParticleKind::distinguishable: {
            RationalMatrix m(rows.size(), cols.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = form->integers(rows[i], cols[j]).norm();
            result = ryser_permanent(m) / Rational(scale_power * exact_factorial_product(output));
            break;
        }
    }
    result.canonicalize();
    return result;
}

TransitionMatrix build_transition_matrix(const UnitaryMultiport& u, int particle_count, ParticleKind kind,
                                         const BuildOptions& options) {
    const int k = static_cast<int>(u.dimension());
    const SpacePtr space = enumerate_states(particle_count, k, kind == ParticleKind::fermion);
    const std::size_t d = space->size();
    RationalMatrix entries(d, d);

    if (options.exact_when_possible && u.gaussian_form()) {
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < d; ++r)
                entries(r, c) = exact_transition_probability(u, (*space)[c], (*space)[r], kind);
        return TransitionMatrix::stochastic(space, space, std::move(entries));
    }

    std::vector<RationalizationFailure> failures;
    for (std::size_t c = 0; c < d; ++c) {
        double column_sum = 0;
        for (std::size_t r = 0; r < d; ++r) {
            const double p = transition_probability(u, (*space)[c], (*space)[r], kind);
            column_sum += p;
            if (auto q = snap_to_rational(p, options.max_denominator, options.snap_tolerance)) {
                entries(r, c) = *q;
            } else {
                failures.push_back({(*space)[c].label(), (*space)[r].label(), p});
            }
        }
        if (std::fabs(column_sum - 1.0) > options.column_sum_tolerance) {
            std::ostringstream os;
            os << "column for input " << (*space)[c].label() << " sums to " << column_sum;
            throw RationalizationError(os.str(), std::move(failures));
        }
    }
    if (!failures.empty()) {
        std::ostringstream os;
        os << failures.size() << " transition probabilities have no rational within " << options.snap_tolerance
           << " with denominator <= " << options.max_denominator << "; first: " << failures.front().input << " -> "
           << failures.front().output << " = " << failures.front().value;
        throw RationalizationError(os.str(), std::move(failures));
    }
    try {
        return TransitionMatrix::stochastic(space, space, std::move(entries));
    } catch (const InvalidArgument& e) {
        throw RationalizationError(std::string("snapped matrix is not stochastic: ") + e.what(), {});
    }
}

TransitionMatrix single_particle_stochastic(const UnitaryMultiport& u, const BuildOptions& options) {
    return build_transition_matrix(u, 1, ParticleKind::boson, options);
}

Rational boson_pair_bunching_average(const UnitaryMultiport& u, const BuildOptions& options) {
    const std::size_t k = u.dimension();
    if (k < 2) throw InvalidArgument("pair bunching needs at least two modes");
    const bool exact = options.exact_when_possible && u.gaussian_form().has_value();
    std::vector<RationalizationFailure> failures;
    Rational total;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            std::vector<int> split(k, 0);
            split[i] = split[j] = 1;
            const OccupationState input(split);
            for (std::size_t m = 0; m < k; ++m) {
                const OccupationState output = OccupationState::concentrated(k, m, 2);
                if (exact) {
                    total += exact_transition_probability(u, input, output, ParticleKind::boson);
                    continue;
                }
                const double p = transition_probability(u, input, output, ParticleKind::boson);
                if (auto snapped = snap_to_rational(p, options.max_denominator, options.snap_tolerance))
                    total += *snapped;
                else
                    failures.push_back({input.label(), output.label(), p});
            }
        }
    if (!failures.empty())
        throw RationalizationError("bunching probability " + failures.front().input + " -> " +
                                       failures.front().output + " has no small-denominator rational",
                                   std::move(failures));
    return total / ratio(static_cast<long>(k * (k - 1) / 2), 1);
}

}  // namespace multiport
