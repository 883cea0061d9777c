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

#include "telechan/protocol.h"

#include <cmath>

namespace telechan {
namespace {

constexpr std::array<int, 3> kAliceQubits = {1, 2, 3};
constexpr std::array<int, 1> kParticle1 = {1};

}  // namespace

Outcome Outcome::from_index(int index) {
    if (index < 0 || index >= kNumOutcomes) {
        throw std::out_of_range("outcome index out of range");
    }
    return Outcome{static_cast<BellLabel>(index / 2), index % 2};
}

std::array<Outcome, kNumOutcomes> all_outcomes() {
    std::array<Outcome, kNumOutcomes> out;
    for (int k = 0; k < kNumOutcomes; k++) {
        out[k] = Outcome::from_index(k);
    }
    return out;
}

std::string outcome_label(Outcome o) {
    return "|" + std::to_string(o.canon) + ">1 " + std::string(bell_name(o.bell));
}

MeasurementBasis MeasurementBasis::bell_canonical() {
    return MeasurementBasis{
        {bell_state(BellLabel::kPhiPlus), bell_state(BellLabel::kPhiMinus), bell_state(BellLabel::kPsiPlus),
         bell_state(BellLabel::kPsiMinus)},
        {PureState::from_bits("0"), PureState::from_bits("1")}};
}

PureState prepare_initial_state(const PureState &input, const ChannelSpec &channel) {
    if (input.n_qubits() != 2) {
        throw ShapeError("the teleported input must be a two-particle state");
    }
    return tensor(input, channel_state(channel));
}

std::vector<Projection> measure_alice(const PureState &state, const MeasurementBasis &basis) {
    if (state.n_qubits() != 5) {
        throw ShapeError("Alice measures a five-particle state");
    }
    std::vector<Projection> out;
    out.reserve(kNumOutcomes);
    for (int k = 0; k < kNumOutcomes; k++) {
        out.push_back(project(state, kAliceQubits, tensor(basis.particle1[k % 2], basis.pair[k / 2])));
    }
    return out;
}

std::array<BranchResult, kNumOutcomes> run_protocol(const PureState &input, const ChannelSpec &channel,
                                                    bool use_hadamard) {
    if (std::abs(input.norm() - 1.0) > 1e-9) {
        throw NormalizationError("input state must be normalized");
    }
    PureState omega = prepare_initial_state(input, channel);
    if (use_hadamard) {
        omega = apply(hadamard(), kParticle1, omega);
    }
    auto projections = measure_alice(omega, MeasurementBasis::bell_canonical());

    std::array<BranchResult, kNumOutcomes> out;
    for (int k = 0; k < kNumOutcomes; k++) {
        auto &p = projections[k];
        out[k].outcome = Outcome::from_index(k);
        out[k].probability = p.probability;
        for (std::size_t j = 0; j < 4; j++) {
            out[k].raw_amplitudes[j] = p.raw[j];
        }
        out[k].bob_state = std::move(p.residual);
    }
    return out;
}

std::array<CMatrix, kNumOutcomes> branch_maps(const ChannelSpec &channel, const MeasurementBasis &basis,
                                              bool use_hadamard) {
    std::array<CMatrix, kNumOutcomes> maps;
    maps.fill(CMatrix(4, 4));
    PureState phi = channel_state(channel);
    for (int col = 0; col < 4; col++) {
        std::array<cplx, 4> params{};
        params[col] = 1.0;
        PureState omega = tensor(two_qubit_state(params[0], params[1], params[2], params[3]), phi);
        if (use_hadamard) {
            omega = apply(hadamard(), kParticle1, omega);
        }
        auto projections = measure_alice(omega, basis);
        for (int k = 0; k < kNumOutcomes; k++) {
            for (std::size_t row = 0; row < 4; row++) {
                maps[k](row, col) = projections[k].raw[row];
            }
        }
    }
    return maps;
}

std::array<CMatrix, kNumOutcomes> coefficient_matrices(const ChannelSpec &channel) {
    auto maps = branch_maps(channel, MeasurementBasis::bell_canonical(), true);
    double scale = 2.0 * std::sqrt(static_cast<double>(channel.support_size()));
    for (auto &m : maps) {
        m *= scale;
    }
    return maps;
}

CMatrix coefficient_matrix(const ChannelSpec &channel, Outcome outcome) {
    return coefficient_matrices(channel)[outcome.index()];
}

}  // namespace telechan
