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

#ifndef TELECHAN_CORRECTIONS_H
#define TELECHAN_CORRECTIONS_H

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "telechan/statevec.h"

namespace telechan {

/// Single-particle factor of Bob's correction. kZX is sigma_z * sigma_x
/// (sigma_x acts first), equal to i sigma_y.
enum class Local : std::uint8_t { kI, kX, kZ, kZX };

inline constexpr std::array<Local, 4> kLocals = {Local::kI, Local::kX, Local::kZ, Local::kZX};

std::string_view local_name(Local l);  // "I", "X", "Z", "ZX"
std::optional<Local> parse_local(std::string_view name);
CMatrix local_matrix(Local l);

/// (local4 (x) local5) . CNOT(4 -> 5)^cnot.
///
/// Member order gives the tie-break order used by the search:
/// no-CNOT before CNOT, then particle 4, then particle 5, I < X < Z < ZX.
struct CorrectionOp {
    bool cnot = false;
    Local p4 = Local::kI;
    Local p5 = Local::kI;

    int index() const { return (cnot ? 16 : 0) + 4 * static_cast<int>(p4) + static_cast<int>(p5); }
    static CorrectionOp from_index(int index);
    bool is_identity() const { return !cnot && p4 == Local::kI && p5 == Local::kI; }

    friend auto operator<=>(const CorrectionOp &, const CorrectionOp &) = default;
};

inline constexpr int kNumCorrections = 32;

/// All 32 operators in tie-break order.
std::array<CorrectionOp, kNumCorrections> all_corrections();

LinearOp realize(const CorrectionOp &op);

/// Rendering in the usual sigma notation, e.g. "I", "(σx)4⊗(σx)5",
/// "(σz σx)4⊗(σx)5 · CNOT".
std::string instruction_string(const CorrectionOp &op);

/// |<a|b>| >= 1 - tol. Both states must be nonzero and of equal dimension.
bool equal_up_to_phase(const PureState &a, const PureState &b, double tol);

/// True iff a = c * b for some nonzero scalar c, elementwise within
/// tol * max(1, |a|_max). The scalar is written to `scale` when given.
bool proportional(const CMatrix &a, const CMatrix &b, double tol, cplx *scale = nullptr);

struct CorrectionSearch {
    enum class Status : std::uint8_t { kCorrected, kZeroProbability, kNoCorrection };
    Status status = Status::kNoCorrection;
    std::optional<CorrectionOp> op;
    /// c with realize(op) . M = c . T.
    cplx scale{};
};

inline constexpr double kProportionalityTol = 1e-12;

/// Smallest operator U (in tie-break order) with realize(U) . branch_map
/// proportional to `target`. Both are 4 x k maps from class parameters to
/// (4,5) amplitudes. An all-zero branch map reports kZeroProbability.
CorrectionSearch find_correction(const CMatrix &branch_map, const CMatrix &target,
                                 double tol = kProportionalityTol);

std::vector<CorrectionSearch> find_corrections(std::span<const CMatrix> branch_maps, const CMatrix &target,
                                               double tol = kProportionalityTol);

}  // namespace telechan

#endif  // TELECHAN_CORRECTIONS_H
