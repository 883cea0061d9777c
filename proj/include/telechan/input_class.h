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

#ifndef TELECHAN_INPUT_CLASS_H
#define TELECHAN_INPUT_CLASS_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "telechan/statevec.h"

namespace telechan {

/// Amplitudes of alpha|00> + beta|10> + delta|01> + gamma|11> are addressed by
/// slot in this order: 0 = alpha, 1 = beta, 2 = delta, 3 = gamma.
inline constexpr std::array<std::string_view, 4> kSlotSymbols = {"α", "β", "δ", "γ"};

/// Amplitude index (particle 1 or 4 most significant) of each slot.
inline constexpr std::array<std::size_t, 4> kSlotIndex = {0, 2, 1, 3};

enum class ClassKind : std::uint8_t { kGeneral, kDiag, kAntiDiag, kLeftCol, kRightCol, kTopRow, kBottomRow };

/// A family of two-particle inputs spanned by a subset of the four slots.
class InputClass {
   public:
    explicit InputClass(ClassKind kind) : kind_(kind) {}

    /// Accepts the CLI names: general, diag, anti-diag, left-col,
    /// right-col, top-row, bottom-row.
    static std::optional<InputClass> parse(std::string_view name);
    static std::array<InputClass, 7> all();

    ClassKind kind() const { return kind_; }
    std::string_view name() const;
    /// e.g. "α|00⟩+γ|11⟩".
    std::string_view expression() const;

    int free_params() const { return static_cast<int>(slots().size()); }
    std::span<const int> slots() const;

    /// 4 x k map from class parameters to (alpha, beta, delta, gamma).
    CMatrix embedding() const;
    /// 4 x k map from class parameters to (4,5) amplitudes in index order;
    /// the state Bob must end up holding.
    CMatrix target() const;

    /// Two-particle state for the given parameters (not normalized).
    PureState state(std::span<const cplx> params) const;

    friend bool operator==(const InputClass &, const InputClass &) = default;

   private:
    ClassKind kind_;
};

}  // namespace telechan

#endif  // TELECHAN_INPUT_CLASS_H
