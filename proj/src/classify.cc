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

#include "telechan/classify.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "telechan/corrections.h"
#include "telechan/random.h"

namespace telechan {
namespace {

const std::vector<ChannelSpec> &channel_list() {
    static const std::vector<ChannelSpec> channels = all_channels();
    return channels;
}

bool pattern_less(std::uint8_t a, std::uint8_t b) {
    std::vector<int> pa, pb;
    for (int i = 0; i < ChannelSpec::kSize; i++) {
        if ((a >> i) & 1) {
            pa.push_back(i);
        }
        if ((b >> i) & 1) {
            pb.push_back(i);
        }
    }
    return pa < pb;
}

ClassificationReport assemble(const InputClass &cls, std::vector<std::optional<InstructionTable>> per_channel) {
    const auto &channels = channel_list();
    std::map<std::uint8_t, std::vector<std::size_t>> by_mask;
    for (std::size_t k = 0; k < channels.size(); k++) {
        if (per_channel[k]) {
            by_mask[channels[k].support_mask()].push_back(k);
        }
    }
    std::vector<std::uint8_t> masks;
    for (const auto &[mask, _] : by_mask) {
        masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end(), pattern_less);

    ClassificationReport report;
    report.cls = cls;
    report.channels_scanned = channels.size();
    for (auto mask : masks) {
        auto members = by_mask[mask];
        ChannelSpec canonical = ChannelSpec::from_support(mask);
        std::stable_partition(members.begin(), members.end(),
                              [&](std::size_t k) { return channels[k] == canonical; });
        SupportPattern pattern{mask, {}};
        for (auto k : members) {
            pattern.channels.push_back(channels[k]);
            report.teleporting_channels.push_back({channels[k], std::move(*per_channel[k])});
        }
        report.support_patterns.push_back(std::move(pattern));
    }
    return report;
}

ImpossibilityScan scan_channel(const ChannelSpec &channel, const CMatrix &embedding, const CMatrix &target) {
    ImpossibilityScan s;
    s.channels = 1;
    for (const auto &m : coefficient_matrices(channel)) {
        CMatrix restricted = m * embedding;
        if (restricted.max_abs() <= 1e-12) {
            continue;
        }
        s.possible_outcomes++;
        bool engaged = true;
        for (std::size_t c = 0; c < restricted.cols(); c++) {
            double col = 0;
            for (std::size_t r = 0; r < 4; r++) {
                col = std::max(col, std::abs(restricted(r, c)));
            }
            engaged &= col > 1e-12;
        }
        s.engaged_outcomes += engaged;
        for (auto op : all_corrections()) {
            s.candidates_checked++;
            if (proportional(realize(op).matrix() * restricted, target, kProportionalityTol)) {
                s.false_positives++;
            }
        }
    }
    return s;
}

void accumulate(ImpossibilityScan &into, const ImpossibilityScan &s) {
    into.channels += s.channels;
    into.possible_outcomes += s.possible_outcomes;
    into.engaged_outcomes += s.engaged_outcomes;
    into.candidates_checked += s.candidates_checked;
    into.false_positives += s.false_positives;
}

std::vector<BasisScanHit> scan_sample(std::size_t sample, std::uint64_t seed) {
    static const InputClass general(ClassKind::kGeneral);
    Rng rng = make_rng(seed, sample);
    MeasurementBasis basis = MeasurementBasis::bell_canonical();
    basis.pair = random_pair_basis(rng);
    ChannelSpec channel = random_channel(rng);
    std::vector<BasisScanHit> hits;
    for (bool h : {true, false}) {
        if (teleports_with_basis(general, channel, basis, h)) {
            hits.push_back({sample, channel.to_string(), h});
        }
    }
    return hits;
}

BasisScanReport finish_scan(std::size_t samples, std::uint64_t seed,
                            const std::vector<std::vector<BasisScanHit>> &per_sample) {
    BasisScanReport r;
    r.samples = samples;
    r.seed = seed;
    for (const auto &hits : per_sample) {
        r.successes += !hits.empty();
        r.counterexamples.insert(r.counterexamples.end(), hits.begin(), hits.end());
    }
    return r;
}

}  // namespace

std::optional<InstructionTable> table_from_maps(const InputClass &cls, const ChannelSpec &channel,
                                                std::span<const CMatrix> coefficient_maps) {
    if (coefficient_maps.size() != kNumOutcomes) {
        throw ShapeError("expected eight coefficient matrices");
    }
    CMatrix embedding = cls.embedding();
    CMatrix target = cls.target();
    InstructionTable table{channel, cls, {}};
    bool any = false;
    for (int k = 0; k < kNumOutcomes; k++) {
        CMatrix restricted = coefficient_maps[k] * embedding;
        auto search = find_correction(restricted, target);
        auto &row = table.rows[k];
        row.outcome = Outcome::from_index(k);
        switch (search.status) {
            case CorrectionSearch::Status::kNoCorrection:
                return std::nullopt;
            case CorrectionSearch::Status::kZeroProbability:
                break;
            case CorrectionSearch::Status::kCorrected:
                row.placement = placement_from_matrix(restricted);
                row.correction = *search.op;
                any = true;
                break;
        }
    }
    if (!any) {
        return std::nullopt;
    }
    return table;
}

std::optional<InstructionTable> is_teleportable(const InputClass &cls, const ChannelSpec &channel) {
    auto maps = coefficient_matrices(channel);
    return table_from_maps(cls, channel, maps);
}

bool teleports_with_basis(const InputClass &cls, const ChannelSpec &channel, const MeasurementBasis &basis,
                          bool use_hadamard) {
    auto maps = branch_maps(channel, basis, use_hadamard);
    CMatrix embedding = cls.embedding();
    CMatrix target = cls.target();
    bool any = false;
    for (const auto &m : maps) {
        auto search = find_correction(m * embedding, target);
        if (search.status == CorrectionSearch::Status::kNoCorrection) {
            return false;
        }
        any |= search.status == CorrectionSearch::Status::kCorrected;
    }
    return any;
}

ClassificationReport classify_all_serial(const InputClass &cls) {
    const auto &channels = channel_list();
    std::vector<std::optional<InstructionTable>> per_channel(channels.size());
    for (std::size_t k = 0; k < channels.size(); k++) {
        per_channel[k] = is_teleportable(cls, channels[k]);
    }
    return assemble(cls, std::move(per_channel));
}

ClassificationReport classify_all(const InputClass &cls) {
    const auto &channels = channel_list();
    const auto n = static_cast<std::int64_t>(channels.size());
    std::vector<std::optional<InstructionTable>> per_channel(channels.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < n; k++) {
        per_channel[k] = is_teleportable(cls, channels[k]);
    }
    return assemble(cls, std::move(per_channel));
}

ImpossibilityScan scan_general_impossibility_serial() {
    InputClass general(ClassKind::kGeneral);
    CMatrix embedding = general.embedding();
    CMatrix target = general.target();
    ImpossibilityScan total;
    for (const auto &channel : channel_list()) {
        accumulate(total, scan_channel(channel, embedding, target));
    }
    return total;
}

ImpossibilityScan scan_general_impossibility() {
    InputClass general(ClassKind::kGeneral);
    CMatrix embedding = general.embedding();
    CMatrix target = general.target();
    const auto &channels = channel_list();
    const auto n = static_cast<std::int64_t>(channels.size());
    std::vector<ImpossibilityScan> parts(channels.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < n; k++) {
        parts[k] = scan_channel(channels[k], embedding, target);
    }
    ImpossibilityScan total;
    for (const auto &p : parts) {
        accumulate(total, p);
    }
    return total;
}

bool factorization_condition(cplx alpha, cplx beta, cplx delta, cplx gamma, double tol) {
    return std::abs(alpha * gamma - beta * delta) <= tol;
}

BasisScanReport general_basis_scan_serial(std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("general basis scan needs at least one sample");
    }
    std::vector<std::vector<BasisScanHit>> per_sample(samples);
    for (std::size_t s = 0; s < samples; s++) {
        per_sample[s] = scan_sample(s, seed);
    }
    return finish_scan(samples, seed, per_sample);
}

BasisScanReport general_basis_scan(std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("general basis scan needs at least one sample");
    }
    std::vector<std::vector<BasisScanHit>> per_sample(samples);
    const auto n = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < n; s++) {
        per_sample[s] = scan_sample(static_cast<std::size_t>(s), seed);
    }
    return finish_scan(samples, seed, per_sample);
}

}  // namespace telechan
