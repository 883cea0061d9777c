// Copyright 2026 The telechan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TELECHAN_RANDOM_H
#define TELECHAN_RANDOM_H

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "telechan/bases.h"
#include "telechan/statevec.h"

namespace telechan {

/// All sampling uses mt19937_64 seeded through std::seed_seq from
/// (seed, stream). Independent streams let parallel loops reproduce the
/// serial draws exactly.
using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Standard complex normal: real and imaginary parts N(0, 1/2).
cplx gaussian_complex(Rng &rng);

/// Unit vector with Gaussian-distributed components.
std::vector<cplx> random_unit_vector(Rng &rng, std::size_t dim);

PureState random_state(Rng &rng, int n_qubits);

/// Orthonormal basis of two qubits from Gram-Schmidt on a complex Gaussian
/// matrix (Haar distributed up to column phases).
std::array<PureState, 4> random_pair_basis(Rng &rng);

/// Uniform over the 6560 nonzero channels.
ChannelSpec random_channel(Rng &rng);

}  // namespace telechan

#endif  // TELECHAN_RANDOM_H
