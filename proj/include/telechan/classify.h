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

#ifndef TELECHAN_CLASSIFY_H
#define TELECHAN_CLASSIFY_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "telechan/bases.h"
#include "telechan/input_class.h"
#include "telechan/instruction_table.h"
#include "telechan/protocol.h"

namespace telechan {

/// Builds the instruction table from the eight coefficient matrices of a
/// channel, or nothing if some possible branch has no correction.
///
/// A class is teleportable when every branch with a nonzero map, restricted
/// to the class parameters, is carried onto the class embedding by one of
/// the 32 corrections. Linearity makes this exact for all parameter values,
/// so no sampling is involved.
std::optional<InstructionTable> table_from_maps(const InputClass &cls, const ChannelSpec &channel,
                                                std::span<const CMatrix> coefficient_maps);

std::optional<InstructionTable> is_teleportable(const InputClass &cls, const ChannelSpec &channel);

/// Same criterion for an arbitrary measurement basis, with or without the
/// Hadamard on particle 1.
bool teleports_with_basis(const InputClass &cls, const ChannelSpec &channel, const MeasurementBasis &basis,
                          bool use_hadamard);

/// Channels sharing a set of nonzero coefficient positions. The all-positive
/// representative is channels.front().
struct SupportPattern {
    std::uint8_t mask = 0;
    std::vector<ChannelSpec> channels;

    std::string to_string() const { return support_to_string(mask); }
};

struct TeleportingChannel {
    ChannelSpec channel;
    InstructionTable table;
};

struct ClassificationReport {
    InputClass cls{ClassKind::kGeneral};
    std::size_t channels_scanned = 0;
    /// Grouped by pattern, in pattern order, canonical representative first.
    std::vector<TeleportingChannel> teleporting_channels;
    std::vector<SupportPattern> support_patterns;

    std::size_t pattern_count() const { return support_patterns.size(); }
    std::size_t channel_count() const { return teleporting_channels.size(); }
};

/// Scans all 6560 channels. Parallel over channels; the result does not
/// depend on the thread count.
ClassificationReport classify_all(const InputClass &cls);
/// Single-threaded reference for classify_all.
ClassificationReport classify_all_serial(const InputClass &cls);

struct ImpossibilityScan {
    std::size_t channels = 0;
    /// Outcomes with a nonzero branch map.
    std::size_t possible_outcomes = 0;
    /// Outcomes whose map has all four parameter columns nonzero.
    std::size_t engaged_outcomes = 0;
    std::size_t candidates_checked = 0;
    /// (channel, outcome, correction) triples satisfying proportionality.
    std::size_t false_positives = 0;

    friend bool operator==(const ImpossibilityScan &, const ImpossibilityScan &) = default;
};

/// Exhaustive check of every channel x outcome x correction for the
/// general class.
ImpossibilityScan scan_general_impossibility();
ImpossibilityScan scan_general_impossibility_serial();

/// alpha gamma == beta delta within tol, the product-state condition for
/// alpha|00> + beta|10> + delta|01> + gamma|11>.
bool factorization_condition(cplx alpha, cplx beta, cplx delta, cplx gamma, double tol = 1e-12);

struct BasisScanHit {
    std::size_t sample = 0;
    std::string channel;
    bool use_hadamard = false;

    friend bool operator==(const BasisScanHit &, const BasisScanHit &) = default;
};

struct BasisScanReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t successes = 0;
    /// Any entry here contradicts the impossibility of general teleportation.
    std::vector<BasisScanHit> counterexamples;

    friend bool operator==(const BasisScanReport &, const BasisScanReport &) = default;
};

/// Draws `samples` random orthonormal bases on particles (2,3) and random
/// channels, and tries to teleport the general class with and without the
/// Hadamard. Throws std::invalid_argument for samples == 0.
BasisScanReport general_basis_scan(std::size_t samples, std::uint64_t seed);
BasisScanReport general_basis_scan_serial(std::size_t samples, std::uint64_t seed);

}  // namespace telechan

#endif  // TELECHAN_CLASSIFY_H
