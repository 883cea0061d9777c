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

#ifndef TELECHAN_PROTOCOL_H
#define TELECHAN_PROTOCOL_H

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "telechan/bases.h"
#include "telechan/statevec.h"

namespace telechan {

/// Alice's joint result: a Bell label on particles (2,3) and a canonical
/// bit on particle 1.
struct Outcome {
    BellLabel bell = BellLabel::kPhiPlus;
    int canon = 0;

    /// 2 * bell + canon, matching the row order of the instruction tables.
    int index() const { return 2 * static_cast<int>(bell) + canon; }
    static Outcome from_index(int index);

    friend auto operator<=>(const Outcome &, const Outcome &) = default;
};

inline constexpr int kNumOutcomes = 8;

std::array<Outcome, kNumOutcomes> all_outcomes();

/// e.g. "|0>1 phi+".
std::string outcome_label(Outcome o);

struct BranchResult {
    Outcome outcome;
    double probability = 0;
    /// Unnormalized (4,5) amplitudes, index order |00>,|01>,|10>,|11>
    /// with particle 4 most significant.
    std::array<cplx, 4> raw_amplitudes{};
    /// Normalized Bob state; empty for a zero-probability branch.
    std::optional<PureState> bob_state;
};

/// Measurement performed by Alice: an orthonormal basis on particles (2,3)
/// and one on particle 1. Branch k corresponds to pair[k / 2] and
/// particle1[k % 2].
struct MeasurementBasis {
    std::array<PureState, 4> pair;
    std::array<PureState, 2> particle1;

    /// Bell basis on (2,3), computational basis on particle 1.
    static MeasurementBasis bell_canonical();
};

/// |psi>_12 (x) |phi>_345.
PureState prepare_initial_state(const PureState &input, const ChannelSpec &channel);

/// Projects a five-particle state onto each of Alice's eight outcomes, in
/// outcome-index order.
std::vector<Projection> measure_alice(const PureState &state, const MeasurementBasis &basis);

/// Runs the four-step procedure: prepare, optionally Hadamard particle 1,
/// Bell-measure (2,3), measure particle 1 canonically. All eight branches
/// are returned, including impossible ones.
std::array<BranchResult, kNumOutcomes> run_protocol(const PureState &input, const ChannelSpec &channel,
                                                    bool use_hadamard);

/// Linear maps from (alpha, beta, delta, gamma) to the raw (4,5) amplitudes
/// of each branch, obtained by running the four basis inputs.
std::array<CMatrix, kNumOutcomes> branch_maps(const ChannelSpec &channel, const MeasurementBasis &basis,
                                              bool use_hadamard);

/// Integer-valued map M with raw = M (alpha, beta, delta, gamma)^T / (2 sqrt N)
/// for the Hadamard protocol with Bell and canonical measurements.
CMatrix coefficient_matrix(const ChannelSpec &channel, Outcome outcome);
std::array<CMatrix, kNumOutcomes> coefficient_matrices(const ChannelSpec &channel);

}  // namespace telechan

#endif  // TELECHAN_PROTOCOL_H
