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

#include "multiport_gpt/fock.hpp"

namespace multiport {

/// D^(N): d_{N-1} x d_N matrix that removes one particle uniformly at random.
/// Entry (i, j) is n_k/N when deleting a particle from mode k of input state
/// s_j yields s'_i, and 0 otherwise. Throws InvalidArgument for N = 0.
TransitionMatrix deletion_matrix(int particle_count, int mode_count, bool pauli_exclusion = false);

/// D^(N→M) = D^(M+1) ··· D^(N-1) D^(N), computed as an exact product.
/// Throws InvalidArgument unless from_particles > to_particles >= 0.
TransitionMatrix deletion_chain(int from_particles, int to_particles, int mode_count,
                                bool pauli_exclusion = false);

}  // namespace multiport
