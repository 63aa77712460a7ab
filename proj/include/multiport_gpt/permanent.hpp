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

#include <bit>
#include <complex>
#include <cstdint>
#include <string>

#include "multiport_gpt/errors.hpp"
#include "multiport_gpt/matrix.hpp"

namespace multiport {

/// Raised when a permanent larger than the configured cap is requested.
class PermanentTooLarge : public Error {
public:
    using Error::Error;
};

inline constexpr int kDefaultPermanentCap = 20;

/// Size cap for permanents; MULTIPORT_GPT_PERMANENT_CAP overrides the default.
int permanent_size_cap();

/// Ryser's inclusion-exclusion formula, iterating column subsets in Gray-code
/// order so each step updates the row sums by a single column:
///
///   perm(A) = Σ_{S ⊆ cols} (-1)^{n-|S|} Π_i Σ_{j∈S} a_ij
///
/// O(2^n · n). T needs +, -, * and value-initialization to zero.
template <class T>
T ryser_permanent(const Matrix<T>& a) {
    if (!a.is_square()) throw DimensionMismatch("permanent of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    if (n >= 63) throw PermanentTooLarge("permanent size " + std::to_string(n) + " is beyond Ryser's range");
    std::vector<T> row_sums(n, T{});
    T total{};
    std::uint64_t subset = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < limit; ++step) {
        const int col = std::countr_zero(step);
        const std::uint64_t bit = std::uint64_t{1} << col;
        const bool adding = (subset & bit) == 0;
        subset ^= bit;
        for (std::size_t i = 0; i < n; ++i) {
            if (adding)
                row_sums[i] += a(i, static_cast<std::size_t>(col));
            else
                row_sums[i] -= a(i, static_cast<std::size_t>(col));
        }
        T prod = row_sums[0];
        for (std::size_t i = 1; i < n; ++i) prod *= row_sums[i];
        if ((n - static_cast<std::size_t>(std::popcount(subset))) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return total;
}

/// Cap-checked complex permanent.
std::complex<double> permanent(const Matrix<std::complex<double>>& m);

/// Determinant by LU decomposition with partial pivoting.
std::complex<double> determinant(const Matrix<std::complex<double>>& m);

}  // namespace multiport
