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

#include "telechan/corrections.h"

#include <cmath>
#include <stdexcept>

#include "telechan/bases.h"

namespace telechan {
namespace {

// Zero-map threshold on the largest entry of an integer-scaled or raw map.
constexpr double kZeroMap = 1e-12;

const std::vector<LinearOp> &realized_table() {
    static const auto table = [] {
        std::vector<LinearOp> ops;
        for (auto op : all_corrections()) {
            CMatrix m = kron(local_matrix(op.p4), local_matrix(op.p5));
            if (op.cnot) {
                m = m * cnot().matrix();
            }
            ops.emplace_back(std::move(m));
        }
        return ops;
    }();
    return table;
}

std::string factor(Local l, int particle) {
    switch (l) {
        case Local::kI:
            return "I" + std::to_string(particle);
        case Local::kX:
            return "(σx)" + std::to_string(particle);
        case Local::kZ:
            return "(σz)" + std::to_string(particle);
        case Local::kZX:
            return "(σz σx)" + std::to_string(particle);
    }
    return "?";
}

}  // namespace

std::string_view local_name(Local l) {
    switch (l) {
        case Local::kI:
            return "I";
        case Local::kX:
            return "X";
        case Local::kZ:
            return "Z";
        case Local::kZX:
            return "ZX";
    }
    return "?";
}

std::optional<Local> parse_local(std::string_view name) {
    for (auto l : kLocals) {
        if (local_name(l) == name) {
            return l;
        }
    }
    return std::nullopt;
}

CMatrix local_matrix(Local l) {
    switch (l) {
        case Local::kI:
            return CMatrix::identity(2);
        case Local::kX:
            return pauli_x().matrix();
        case Local::kZ:
            return pauli_z().matrix();
        case Local::kZX:
            return pauli_z().matrix() * pauli_x().matrix();
    }
    throw std::invalid_argument("unknown local operator");
}

CorrectionOp CorrectionOp::from_index(int index) {
    if (index < 0 || index >= kNumCorrections) {
        throw std::out_of_range("correction index out of range");
    }
    return CorrectionOp{index >= 16, static_cast<Local>((index / 4) % 4), static_cast<Local>(index % 4)};
}

std::array<CorrectionOp, kNumCorrections> all_corrections() {
    std::array<CorrectionOp, kNumCorrections> out;
    for (int k = 0; k < kNumCorrections; k++) {
        out[k] = CorrectionOp::from_index(k);
    }
    return out;
}

LinearOp realize(const CorrectionOp &op) {
    return realized_table()[op.index()];
}

std::string instruction_string(const CorrectionOp &op) {
    std::string s;
    if (op.p4 == Local::kI && op.p5 == Local::kI) {
        s = op.cnot ? "" : "I";
    } else {
        s = factor(op.p4, 4) + "⊗" + factor(op.p5, 5);
    }
    if (op.cnot) {
        s += s.empty() ? "CNOT" : " · CNOT";
    }
    return s;
}

bool equal_up_to_phase(const PureState &a, const PureState &b, double tol) {
    double na = a.norm();
    double nb = b.norm();
    if (na == 0 || nb == 0) {
        throw std::domain_error("phase comparison with a zero vector");
    }
    return std::abs(inner(a, b)) / (na * nb) >= 1.0 - tol;
}

bool proportional(const CMatrix &a, const CMatrix &b, double tol, cplx *scale) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("proportionality test on maps of different shape");
    }
    double bb = 0;
    cplx ab{};
    for (std::size_t k = 0; k < a.data().size(); k++) {
        bb += std::norm(b.data()[k]);
        ab += std::conj(b.data()[k]) * a.data()[k];
    }
    if (bb == 0) {
        return false;
    }
    cplx c = ab / bb;
    double bound = tol * std::max(1.0, a.max_abs());
    if (std::abs(c) <= bound) {
        return false;
    }
    for (std::size_t k = 0; k < a.data().size(); k++) {
        if (std::abs(a.data()[k] - c * b.data()[k]) > bound) {
            return false;
        }
    }
    if (scale) {
        *scale = c;
    }
    return true;
}

CorrectionSearch find_correction(const CMatrix &branch_map, const CMatrix &target, double tol) {
    if (branch_map.rows() != 4 || target.rows() != 4 || branch_map.cols() != target.cols()) {
        throw ShapeError("correction search expects 4 x k branch and target maps");
    }
    CorrectionSearch result;
    if (branch_map.max_abs() <= kZeroMap) {
        result.status = CorrectionSearch::Status::kZeroProbability;
        return result;
    }
    for (auto op : all_corrections()) {
        cplx c;
        if (proportional(realize(op).matrix() * branch_map, target, tol, &c)) {
            result.status = CorrectionSearch::Status::kCorrected;
            result.op = op;
            result.scale = c;
            return result;
        }
    }
    return result;
}

std::vector<CorrectionSearch> find_corrections(std::span<const CMatrix> branch_maps, const CMatrix &target,
                                               double tol) {
    std::vector<CorrectionSearch> out;
    out.reserve(branch_maps.size());
    for (const auto &m : branch_maps) {
        out.push_back(find_correction(m, target, tol));
    }
    return out;
}

}  // namespace telechan
