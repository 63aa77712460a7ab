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

#include "multiport_gpt/permanent.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace multiport {

int permanent_size_cap() {
    if (const char* env = std::getenv("MULTIPORT_GPT_PERMANENT_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 63) return static_cast<int>(v);
    }
    return kDefaultPermanentCap;
}

std::complex<double> permanent(const Matrix<std::complex<double>>& m) {
    const int cap = permanent_size_cap();
    if (static_cast<int>(m.rows()) > cap)
        throw PermanentTooLarge("permanent of size " + std::to_string(m.rows()) + " exceeds the cap of " +
                                std::to_string(cap) + " (set MULTIPORT_GPT_PERMANENT_CAP to raise it)");
    return ryser_permanent(m);
}

std::complex<double> determinant(const Matrix<std::complex<double>>& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix<std::complex<double>> lu = m;
    const std::size_t n = lu.rows();
    std::complex<double> det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(lu(r, c)) > std::abs(lu(p, c))) p = r;
        if (std::abs(lu(p, c)) == 0.0) return 0.0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(p, j), lu(c, j));
            det = -det;
        }
        det *= lu(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const std::complex<double> f = lu(r, c) / lu(c, c);
            for (std::size_t j = c; j < n; ++j) lu(r, j) -= f * lu(c, j);
        }
    }
    return det;
}

}  // namespace multiport
