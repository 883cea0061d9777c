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

#include "telechan/bases.h"

#include <cmath>

namespace telechan {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Listing position -> (particle 3, 4, 5) bits.
constexpr std::array<std::size_t, ChannelSpec::kSize> kChannelBasis = {
    0b000, 0b100, 0b010, 0b001, 0b110, 0b101, 0b011, 0b111};

}  // namespace

std::string_view bell_name(BellLabel label) {
    switch (label) {
        case BellLabel::kPhiPlus:
            return "phi+";
        case BellLabel::kPhiMinus:
            return "phi-";
        case BellLabel::kPsiPlus:
            return "psi+";
        case BellLabel::kPsiMinus:
            return "psi-";
    }
    return "?";
}

std::optional<BellLabel> parse_bell(std::string_view name) {
    for (auto label : kBellLabels) {
        if (bell_name(label) == name) {
            return label;
        }
    }
    return std::nullopt;
}

PureState bell_state(BellLabel label) {
    double s = kInvSqrt2;
    switch (label) {
        case BellLabel::kPhiPlus:
            return PureState(2, {s, 0, 0, s});
        case BellLabel::kPhiMinus:
            return PureState(2, {s, 0, 0, -s});
        case BellLabel::kPsiPlus:
            return PureState(2, {0, s, s, 0});
        case BellLabel::kPsiMinus:
            return PureState(2, {0, s, -s, 0});
    }
    throw std::invalid_argument("unknown Bell label");
}

LinearOp pauli_x() {
    return LinearOp(CMatrix(2, 2, {0, 1, 1, 0}));
}

LinearOp pauli_z() {
    return LinearOp(CMatrix(2, 2, {1, 0, 0, -1}));
}

LinearOp hadamard() {
    return LinearOp(kInvSqrt2 * (pauli_x().matrix() + pauli_z().matrix()));
}

LinearOp cnot() {
    return LinearOp(CMatrix(4, 4, {1, 0, 0, 0,  //
                                   0, 1, 0, 0,  //
                                   0, 0, 0, 1,  //
                                   0, 0, 1, 0}));
}

ChannelSpec::ChannelSpec(std::array<int, kSize> coeffs) : coeffs_(coeffs) {
    bool any = false;
    for (int c : coeffs_) {
        if (c < -1 || c > 1) {
            throw InvalidChannel("channel coefficients must be -1, 0 or +1");
        }
        any |= c != 0;
    }
    if (!any) {
        throw InvalidChannel("channel has no nonzero coefficient");
    }
}

ChannelSpec ChannelSpec::parse(std::string_view code) {
    if (code.size() != kSize) {
        throw InvalidChannel("channel code must have 8 characters over {+,0,-}, got '" + std::string(code) + "'");
    }
    std::array<int, kSize> c{};
    for (int i = 0; i < kSize; i++) {
        switch (code[i]) {
            case '+':
                c[i] = 1;
                break;
            case '0':
                c[i] = 0;
                break;
            case '-':
                c[i] = -1;
                break;
            default:
                throw InvalidChannel("bad character in channel code '" + std::string(code) + "'");
        }
    }
    return ChannelSpec(c);
}

ChannelSpec ChannelSpec::from_support(std::uint8_t mask) {
    std::array<int, kSize> c{};
    for (int i = 0; i < kSize; i++) {
        c[i] = (mask >> i) & 1;
    }
    return ChannelSpec(c);
}

int ChannelSpec::support_size() const {
    int n = 0;
    for (int c : coeffs_) {
        n += c != 0;
    }
    return n;
}

std::uint8_t ChannelSpec::support_mask() const {
    std::uint8_t m = 0;
    for (int i = 0; i < kSize; i++) {
        if (coeffs_[i] != 0) {
            m |= std::uint8_t(1u << i);
        }
    }
    return m;
}

std::string ChannelSpec::to_string() const {
    std::string s;
    for (int c : coeffs_) {
        s += c > 0 ? '+' : c < 0 ? '-' : '0';
    }
    return s;
}

std::size_t ChannelSpec::basis_index(int position) {
    return kChannelBasis.at(position);
}

std::vector<ChannelSpec> all_channels() {
    std::vector<ChannelSpec> out;
    out.reserve(6560);
    for (int code = 0; code < 6561; code++) {
        std::array<int, ChannelSpec::kSize> c{};
        int rem = code;
        for (int i = ChannelSpec::kSize - 1; i >= 0; i--) {
            c[i] = rem % 3 - 1;
            rem /= 3;
        }
        bool any = false;
        for (int v : c) {
            any |= v != 0;
        }
        if (any) {
            out.emplace_back(c);
        }
    }
    return out;
}

std::string support_to_string(std::uint8_t mask) {
    std::string s = "{";
    for (int i = 0; i < ChannelSpec::kSize; i++) {
        if ((mask >> i) & 1) {
            if (s.size() > 1) {
                s += ',';
            }
            s += ChannelSpec::kLetters[i];
        }
    }
    return s + "}";
}

PureState channel_state(const ChannelSpec &channel) {
    double scale = 1.0 / std::sqrt(static_cast<double>(channel.support_size()));
    std::vector<cplx> amps(8);
    for (int i = 0; i < ChannelSpec::kSize; i++) {
        amps[kChannelBasis[i]] = scale * channel.coeff(i);
    }
    return PureState(3, std::move(amps));
}

std::pair<PureState, PureState> rotated_basis_pair(cplx a, cplx b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
        throw NormalizationError("rotation coefficients must satisfy |A|^2 + |B|^2 = 1");
    }
    PureState phi(1, {std::conj(a), -b});
    PureState chi(1, {std::conj(b), a});
    return {phi, chi};
}

PureState two_qubit_state(cplx alpha, cplx beta, cplx delta, cplx gamma) {
    // Index order is (particle 1, particle 2): |00>, |01>, |10>, |11>.
    return PureState(2, {alpha, delta, beta, gamma});
}

}  // namespace telechan
