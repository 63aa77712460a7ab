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

#include <cstddef>
#include <optional>
#include <vector>

#include "multiport_gpt/rational.hpp"

namespace multiport {

/// Column indices of a maximal linearly independent set of columns, chosen
/// greedily left to right (the pivot columns of the reduced row echelon form).
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Exact inverse, or nullopt if the matrix is singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace multiport
