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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multiport_gpt/fock.hpp"
#include "multiport_gpt/gaussian_rational.hpp"
#include "multiport_gpt/matrix.hpp"

namespace multiport {

using Complex = std::complex<double>;
using ComplexMatrix = Matrix<Complex>;

enum class ParticleKind { boson, fermion, distinguishable };

std::string to_string(ParticleKind kind);
ParticleKind parse_particle_kind(std::string_view text);

inline constexpr double kUnitarityTolerance = 1e-12;

/// Exact representation U = G / sqrt(scale) with G a Gaussian-integer matrix.
/// Covers the fourth-root-of-unity multiports (Fourier 2/4-port, balanced
/// beamsplitter) and the rational Grover multiports.
struct GaussianForm {
    Matrix<GaussianRational> integers;
    std::int64_t scale = 1;
};

/// K x K mode-transformation amplitudes. Entry (j, k) is the amplitude for a
/// particle entering mode k to leave through mode j.
class UnitaryMultiport {
public:
    /// Throws InvalidArgument unless U U† = 1 within kUnitarityTolerance.
    explicit UnitaryMultiport(ComplexMatrix amplitudes, std::string name = "custom");

    std::size_t dimension() const { return amplitudes_.rows(); }
    const Complex& operator()(std::size_t out, std::size_t in) const { return amplitudes_(out, in); }
    const ComplexMatrix& amplitudes() const { return amplitudes_; }
    const std::string& name() const { return name_; }
    /// Present when every entry is a Gaussian integer over sqrt(scale) for a
    /// scale in {1, K, K^2}.
    const std::optional<GaussianForm>& gaussian_form() const { return exact_; }

private:
    ComplexMatrix amplitudes_;
    std::string name_;
    std::optional<GaussianForm> exact_;
};

/// [[sqrt(T), i sqrt(R)], [i sqrt(R), sqrt(T)]] with R = 1 - T.
UnitaryMultiport beamsplitter(double transmissivity);
/// U_jk = ω^{δ_jk} / sqrt(3), ω = exp(2πi/3).
UnitaryMultiport tritter();
/// U_jk = exp(2πi (j-1)(k-1)/n) / sqrt(n); for n = 4 this is i^{(j-1)(k-1)}/2.
UnitaryMultiport fourier(int n);
/// U = (2/n) J - 1. For n = 4 this is (1 - 2δ_jk)/2; other n are an extension.
UnitaryMultiport grover(int n);

/// Parses "bs:T" (T decimal or p/q), "tritter", "fourier:n", "grover:n".
UnitaryMultiport builtin_unitary(std::string_view descriptor);

/// True iff every |U_jk| equals 1/sqrt(K) within kUnitarityTolerance.
bool is_symmetric_multiport(const UnitaryMultiport& u);

/// Floating-point transition probability from `input` to `output`:
///   boson            |perm(U_sub)|^2 / (Π in_k! Π out_j!)
///   fermion          |det(U_sub)|^2, zero if any occupation exceeds 1
///   distinguishable  perm(M_sub) / Π out_j!,  M_jk = |U_jk|^2
/// U_sub repeats column k in_k times and row j out_j times.
double transition_probability(const UnitaryMultiport& u, const OccupationState& input,
                              const OccupationState& output, ParticleKind kind);

/// Same rule evaluated exactly; requires a Gaussian form.
Rational exact_transition_probability(const UnitaryMultiport& u, const OccupationState& input,
                                      const OccupationState& output, ParticleKind kind);

/// One entry that could not be snapped to a small-denominator rational.
struct RationalizationFailure {
    std::string input;
    std::string output;
    double value = 0;
};

class RationalizationError : public Error {
public:
    RationalizationError(const std::string& what, std::vector<RationalizationFailure> failures)
        : Error(what), failures_(std::move(failures)) {}
    const std::vector<RationalizationFailure>& failures() const { return failures_; }

private:
    std::vector<RationalizationFailure> failures_;
};

struct BuildOptions {
    /// Use exact Gaussian arithmetic when the unitary admits it.
    bool exact_when_possible = true;
    std::int64_t max_denominator = 10000;
    double snap_tolerance = 1e-9;
    double column_sum_tolerance = 1e-9;
};

/// Full N-particle transition matrix over the canonical state space (the
/// Pauli-restricted one for fermions). Exact when a Gaussian form exists,
/// otherwise computed in float64 and snapped entry by entry.
TransitionMatrix build_transition_matrix(const UnitaryMultiport& u, int particle_count, ParticleKind kind,
                                         const BuildOptions& options = {});

/// K x K matrix of |U_jk|^2.
TransitionMatrix single_particle_stochastic(const UnitaryMultiport& u, const BuildOptions& options = {});

/// Average over the C(K,2) split inputs {e_i+e_j} of the probability that both
/// bosons leave in one mode. Only the bunching entries are rationalized, so
/// this works even when the rest of the two-particle matrix is irrational
/// (the Fourier 5-port).
Rational boson_pair_bunching_average(const UnitaryMultiport& u, const BuildOptions& options = {});

}  // namespace multiport
