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

#ifndef TELECHAN_INSTRUCTION_TABLE_H
#define TELECHAN_INSTRUCTION_TABLE_H

#include <array>
#include <string>

#include "telechan/bases.h"
#include "telechan/corrections.h"
#include "telechan/input_class.h"
#include "telechan/protocol.h"

namespace telechan {

/// Signed integer placement of class parameters over Bob's four basis
/// states: placement[index][j] multiplies parameter j at (4,5) amplitude
/// `index`. Columns past the class's parameter count are zero.
using Placement = std::array<std::array<int, 4>, 4>;

CMatrix placement_matrix(const Placement &p, int params);
/// Rounds an integer-valued 4 x k map; throws if it is not integral.
Placement placement_from_matrix(const CMatrix &m);

/// Bob's state as an expression in the class parameters, basis states in
/// the order |00>, |10>, |01>, |11>, e.g. "-γ|00⟩ + α|11⟩".
std::string render_placement(const Placement &p, const InputClass &cls);

struct TableRow {
    Outcome outcome;
    Placement placement{};
    CorrectionOp correction;

    friend bool operator==(const TableRow &, const TableRow &) = default;
};

/// Outcome -> (Bob's collapsed state, Bob's correction) for one channel and
/// one input class. Rows are in outcome-index order.
struct InstructionTable {
    ChannelSpec channel;
    InputClass cls;
    std::array<TableRow, kNumOutcomes> rows{};

    /// Every row's correction maps its placement onto the class embedding
    /// up to a nonzero scalar.
    bool self_verifies(double tol = kProportionalityTol) const;

    friend bool operator==(const InstructionTable &, const InstructionTable &) = default;
};

}  // namespace telechan

#endif  // TELECHAN_INSTRUCTION_TABLE_H
