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

#include "multiport_gpt/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "multiport_gpt/errors.hpp"

namespace multiport {

namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (!is_integer_text(s)) throw ParseError("malformed rational '" + std::string(whole) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = 1;
    if (slash != std::string_view::npos) den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational best_rational_approximation(double x, std::int64_t max_denominator) {
    if (!std::isfinite(x)) throw InvalidArgument("cannot rationalize a non-finite value");
    if (max_denominator < 1) throw InvalidArgument("max_denominator must be positive");
    const bool negative = x < 0;
    long double y = std::fabs(static_cast<long double>(x));
    const long double target = y;

    // h/k are successive convergents; (h0,k0) the one before (h1,k1).
    std::int64_t h0 = 0, k0 = 1, h1 = 1, k1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        const long double a_real = std::floor(y);
        if (a_real > static_cast<long double>(std::numeric_limits<std::int64_t>::max() / 4)) break;
        const auto a = static_cast<std::int64_t>(a_real);
        const std::int64_t k2 = a * k1 + k0;
        if (k2 > max_denominator) {
            // Largest admissible semiconvergent between the last two convergents.
            const std::int64_t t = (max_denominator - k0) / k1;
            const std::int64_t hs = t * h1 + h0, ks = t * k1 + k0;
            const long double err_semi = std::fabs(target - static_cast<long double>(hs) / ks);
            const long double err_conv = std::fabs(target - static_cast<long double>(h1) / k1);
            if (t > 0 && err_semi < err_conv) {
                h1 = hs;
                k1 = ks;
            }
            break;
        }
        const std::int64_t h2 = a * h1 + h0;
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
        const long double frac = y - a_real;
        if (frac <= 0 || std::fabs(target - static_cast<long double>(h1) / k1) == 0) break;
        y = 1 / frac;
    }
    Rational q(mpz_class(std::to_string(negative ? -h1 : h1)), mpz_class(std::to_string(k1)));
    q.canonicalize();
    return q;
}

std::optional<Rational> snap_to_rational(double x, std::int64_t max_denominator, double tolerance) {
    Rational q = best_rational_approximation(x, max_denominator);
    if (std::fabs(q.get_d() - x) > tolerance) return std::nullopt;
    return q;
}

}  // namespace multiport
