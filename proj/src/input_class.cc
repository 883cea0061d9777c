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

#include "telechan/input_class.h"

#include <stdexcept>

#include "telechan/bases.h"

namespace telechan {
namespace {

struct ClassInfo {
    std::string_view name;
    std::string_view expression;
    std::array<int, 4> slots;
    int count;
};

constexpr std::array<ClassInfo, 7> kInfo = {{
    {"general", "α|00⟩+β|10⟩+δ|01⟩+γ|11⟩", {0, 1, 2, 3}, 4},
    {"diag", "α|00⟩+γ|11⟩", {0, 3}, 2},
    {"anti-diag", "β|10⟩+δ|01⟩", {1, 2}, 2},
    {"left-col", "α|00⟩+δ|01⟩", {0, 2}, 2},
    {"right-col", "β|10⟩+γ|11⟩", {1, 3}, 2},
    {"top-row", "α|00⟩+β|10⟩", {0, 1}, 2},
    {"bottom-row", "δ|01⟩+γ|11⟩", {2, 3}, 2},
}};

const ClassInfo &info(ClassKind k) {
    return kInfo[static_cast<std::size_t>(k)];
}

}  // namespace

std::optional<InputClass> InputClass::parse(std::string_view name) {
    for (std::size_t k = 0; k < kInfo.size(); k++) {
        if (kInfo[k].name == name) {
            return InputClass(static_cast<ClassKind>(k));
        }
    }
    return std::nullopt;
}

std::array<InputClass, 7> InputClass::all() {
    return {InputClass(ClassKind::kGeneral),  InputClass(ClassKind::kDiag),     InputClass(ClassKind::kAntiDiag),
            InputClass(ClassKind::kLeftCol),  InputClass(ClassKind::kRightCol), InputClass(ClassKind::kTopRow),
            InputClass(ClassKind::kBottomRow)};
}

std::string_view InputClass::name() const {
    return info(kind_).name;
}

std::string_view InputClass::expression() const {
    return info(kind_).expression;
}

std::span<const int> InputClass::slots() const {
    const auto &i = info(kind_);
    return std::span<const int>(i.slots.data(), i.count);
}

CMatrix InputClass::embedding() const {
    CMatrix e(4, slots().size());
    for (std::size_t j = 0; j < slots().size(); j++) {
        e(slots()[j], j) = 1.0;
    }
    return e;
}

CMatrix InputClass::target() const {
    CMatrix t(4, slots().size());
    for (std::size_t j = 0; j < slots().size(); j++) {
        t(kSlotIndex[slots()[j]], j) = 1.0;
    }
    return t;
}

PureState InputClass::state(std::span<const cplx> params) const {
    if (params.size() != slots().size()) {
        throw std::invalid_argument("wrong number of class parameters");
    }
    std::array<cplx, 4> a{};
    for (std::size_t j = 0; j < params.size(); j++) {
        a[slots()[j]] = params[j];
    }
    return two_qubit_state(a[0], a[1], a[2], a[3]);
}

}  // namespace telechan
