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

#include "telechan/random.h"

#include <cmath>

namespace telechan {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

cplx gaussian_complex(Rng &rng) {
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    double re = n(rng);
    double im = n(rng);
    return {re, im};
}

std::vector<cplx> random_unit_vector(Rng &rng, std::size_t dim) {
    std::vector<cplx> v(dim);
    double t = 0;
    while (t == 0) {
        t = 0;
        for (auto &x : v) {
            x = gaussian_complex(rng);
            t += std::norm(x);
        }
    }
    for (auto &x : v) {
        x /= std::sqrt(t);
    }
    return v;
}

PureState random_state(Rng &rng, int n_qubits) {
    return PureState(n_qubits, random_unit_vector(rng, std::size_t{1} << n_qubits));
}

std::array<PureState, 4> random_pair_basis(Rng &rng) {
    std::vector<std::vector<cplx>> cols;
    while (cols.size() < 4) {
        std::vector<cplx> v(4);
        for (auto &x : v) {
            x = gaussian_complex(rng);
        }
        // Modified Gram-Schmidt, done twice for orthogonality to ~1e-16.
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &u : cols) {
                cplx d{};
                for (int k = 0; k < 4; k++) {
                    d += std::conj(u[k]) * v[k];
                }
                for (int k = 0; k < 4; k++) {
                    v[k] -= d * u[k];
                }
            }
        }
        double n = 0;
        for (auto &x : v) {
            n += std::norm(x);
        }
        n = std::sqrt(n);
        if (n < 1e-8) {
            continue;
        }
        for (auto &x : v) {
            x /= n;
        }
        cols.push_back(std::move(v));
    }
    return {PureState(2, cols[0]), PureState(2, cols[1]), PureState(2, cols[2]), PureState(2, cols[3])};
}

ChannelSpec random_channel(Rng &rng) {
    static const std::vector<ChannelSpec> channels = all_channels();
    std::uniform_int_distribution<std::size_t> pick(0, channels.size() - 1);
    return channels[pick(rng)];
}

}  // namespace telechan
