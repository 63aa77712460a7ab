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

#include "multiport_gpt/reduction.hpp"

#include <string>

#include "multiport_gpt/errors.hpp"

namespace multiport {

TransitionMatrix deletion_matrix(int particle_count, int mode_count, bool pauli_exclusion) {
    if (particle_count < 1) throw InvalidArgument("deletion needs at least one particle");
    const SpacePtr in = enumerate_states(particle_count, mode_count, pauli_exclusion);
    const SpacePtr out = enumerate_states(particle_count - 1, mode_count, pauli_exclusion);
    RationalMatrix d(out->size(), in->size());
    for (std::size_t j = 0; j < in->size(); ++j) {
        const OccupationState& s = (*in)[j];
        std::vector<int> occ = s.occupations();
        for (std::size_t k = 0; k < occ.size(); ++k) {
            if (occ[k] == 0) continue;
            const int n_k = occ[k];
            --occ[k];
            d(out->index_of(OccupationState(occ)), j) = ratio(n_k, particle_count);
            ++occ[k];
        }
    }
    return TransitionMatrix::stochastic(in, out, std::move(d));
}

TransitionMatrix deletion_chain(int from_particles, int to_particles, int mode_count, bool pauli_exclusion) {
    if (to_particles < 0 || to_particles >= from_particles)
        throw InvalidArgument("deletion chain needs from > to >= 0 (got " + std::to_string(from_particles) +
                              " -> " + std::to_string(to_particles) + ")");
    TransitionMatrix chain = deletion_matrix(from_particles, mode_count, pauli_exclusion);
    for (int n = from_particles - 1; n > to_particles; --n)
        chain = compose(deletion_matrix(n, mode_count, pauli_exclusion), chain);
    return TransitionMatrix::stochastic(chain.input_space(), chain.output_space(), chain.entries());
}

}  // namespace multiport
