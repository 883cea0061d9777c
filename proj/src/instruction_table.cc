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

#include "telechan/instruction_table.h"

#include <cmath>
#include <stdexcept>

namespace telechan {

CMatrix placement_matrix(const Placement &p, int params) {
    CMatrix m(4, params);
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < params; c++) {
            m(r, c) = p[r][c];
        }
    }
    return m;
}

Placement placement_from_matrix(const CMatrix &m) {
    if (m.rows() != 4 || m.cols() > 4) {
        throw ShapeError("placement must be a 4 x k map with k <= 4");
    }
    Placement p{};
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            double re = std::round(m(r, c).real());
            if (std::abs(m(r, c) - cplx(re, 0)) > 1e-9) {
                throw std::domain_error("branch map is not integer valued");
            }
            p[r][c] = static_cast<int>(re);
        }
    }
    return p;
}

std::string render_placement(const Placement &p, const InputClass &cls) {
    static constexpr std::array<const char *, 4> kKet = {"|00⟩", "|01⟩", "|10⟩", "|11⟩"};
    static constexpr std::array<int, 4> kOrder = {0, 2, 1, 3};
    std::string out;
    for (int index : kOrder) {
        std::string coeff;
        int terms = 0;
        for (int j = 0; j < cls.free_params(); j++) {
            int v = p[index][j];
            if (v == 0) {
                continue;
            }
            std::string sym(kSlotSymbols[cls.slots()[j]]);
            std::string mag = std::abs(v) == 1 ? sym : std::to_string(std::abs(v)) + sym;
            if (terms == 0) {
                coeff += (v < 0 ? "-" : "") + mag;
            } else {
                coeff += (v < 0 ? " - " : " + ") + mag;
            }
            terms++;
        }
        if (terms == 0) {
            continue;
        }
        if (terms > 1) {
            coeff = "(" + coeff + ")";
        }
        if (out.empty()) {
            out = coeff + kKet[index];
        } else if (coeff[0] == '-') {
            out += " - " + coeff.substr(1) + kKet[index];
        } else {
            out += " + " + coeff + kKet[index];
        }
    }
    return out.empty() ? "0" : out;
}

bool InstructionTable::self_verifies(double tol) const {
    CMatrix target = cls.target();
    for (const auto &row : rows) {
        if (row.placement == Placement{}) {
            continue;  // impossible branch
        }
        CMatrix m = placement_matrix(row.placement, cls.free_params());
        if (!proportional(realize(row.correction).matrix() * m, target, tol)) {
            return false;
        }
    }
    return true;
}

}  // namespace telechan
