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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "multiport_gpt/matrix.hpp"

namespace multiport {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using RationalMatrix = Matrix<Rational>;

/// num/den in lowest terms.
inline Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q" or "p" (optionally signed). Throws ParseError on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Best rational approximation of `x` with denominator at most
/// `max_denominator`, found from the continued-fraction expansion of `x`
/// (convergents plus the final semiconvergent).
Rational best_rational_approximation(double x, std::int64_t max_denominator);

/// Snaps `x` to the best approximation with denominator <= `max_denominator`,
/// or returns nullopt when that approximation is farther than `tolerance`.
std::optional<Rational> snap_to_rational(double x, std::int64_t max_denominator = 10000,
                                         double tolerance = 1e-9);

}  // namespace multiport
