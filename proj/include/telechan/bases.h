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

#ifndef TELECHAN_BASES_H
#define TELECHAN_BASES_H

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "telechan/statevec.h"

namespace telechan {

enum class BellLabel : std::uint8_t { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::kPhiPlus, BellLabel::kPhiMinus, BellLabel::kPsiPlus, BellLabel::kPsiMinus};

/// "phi+", "phi-", "psi+", "psi-".
std::string_view bell_name(BellLabel label);
std::optional<BellLabel> parse_bell(std::string_view name);

/// Phi+- = (|00> +- |11>)/sqrt2, Psi+- = (|01> +- |10>)/sqrt2.
PureState bell_state(BellLabel label);

LinearOp pauli_x();
LinearOp pauli_z();
/// (sigma_x + sigma_z)/sqrt2.
LinearOp hadamard();
/// Control is the first (most significant) qubit.
LinearOp cnot();

struct InvalidChannel : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NormalizationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Three-particle channel with integer coefficients a..h in {-1, 0, +1}
/// attached, in that order, to |000>, |100>, |010>, |001>, |110>, |101>,
/// |011>, |111> of particles (3,4,5). The realized state divides every
/// coefficient by sqrt(N), N the number of nonzero coefficients.
///
/// Text form: eight characters over {+,0,-} in the same order, e.g.
/// "+000000+" for (|000> + |111>)/sqrt2.
class ChannelSpec {
   public:
    static constexpr int kSize = 8;
    static constexpr std::string_view kLetters = "abcdefgh";

    explicit ChannelSpec(std::array<int, kSize> coeffs);

    /// Throws InvalidChannel on malformed text or an all-zero code.
    static ChannelSpec parse(std::string_view code);
    /// All-positive channel supported on `mask` (bit i = coefficient i).
    static ChannelSpec from_support(std::uint8_t mask);

    const std::array<int, kSize> &coeffs() const { return coeffs_; }
    int coeff(int i) const { return coeffs_[i]; }
    int support_size() const;
    std::uint8_t support_mask() const;
    std::string to_string() const;

    /// Amplitude index (particle 3 most significant) of listed position i.
    static std::size_t basis_index(int position);

    friend auto operator<=>(const ChannelSpec &, const ChannelSpec &) = default;

   private:
    std::array<int, kSize> coeffs_;
};

/// The 3^8 - 1 nonzero channels, ordered by coefficient tuple with -1 < 0 < +1.
std::vector<ChannelSpec> all_channels();

/// "{a,h}" style rendering of a support mask.
std::string support_to_string(std::uint8_t mask);

PureState channel_state(const ChannelSpec &channel);

/// Orthonormal pair (phi, chi) with |0> = A|phi> + B|chi> and
/// |1> = -B*|phi> + A*|chi>, i.e. phi = A*|0> - B|1>, chi = B*|0> + A|1>.
std::pair<PureState, PureState> rotated_basis_pair(cplx a, cplx b);

/// alpha|00> + beta|10> + delta|01> + gamma|11> on particles (1,2).
PureState two_qubit_state(cplx alpha, cplx beta, cplx delta, cplx gamma);

}  // namespace telechan

#endif  // TELECHAN_BASES_H
