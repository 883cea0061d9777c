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

#include "telechan/statevec.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace telechan {
namespace {

int checked_qubit_count(std::size_t dim) {
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        n++;
    }
    if ((std::size_t{1} << n) != dim || n < 1) {
        throw ShapeError("dimension " + std::to_string(dim) + " is not a power of two >= 2");
    }
    if (n > kMaxQubits) {
        throw SizeError("register of " + std::to_string(n) + " qubits exceeds the 5-qubit limit");
    }
    return n;
}

// Bit masks (in amplitude-index space) for each target, most significant first.
std::vector<std::size_t> target_masks(int n, std::span<const int> targets) {
    std::vector<std::size_t> masks;
    masks.reserve(targets.size());
    for (int t : targets) {
        if (t < 1 || t > n) {
            throw ShapeError("qubit index " + std::to_string(t) + " outside register of " + std::to_string(n));
        }
        std::size_t m = std::size_t{1} << (n - t);
        if (std::find(masks.begin(), masks.end(), m) != masks.end()) {
            throw ShapeError("duplicate target qubit " + std::to_string(t));
        }
        masks.push_back(m);
    }
    return masks;
}

std::size_t gather(std::size_t index, const std::vector<std::size_t> &masks) {
    std::size_t sub = 0;
    for (auto m : masks) {
        sub = (sub << 1) | ((index & m) ? 1 : 0);
    }
    return sub;
}

std::size_t scatter(std::size_t index, std::size_t sub, const std::vector<std::size_t> &masks) {
    for (std::size_t k = masks.size(); k-- > 0;) {
        if (sub & 1) {
            index |= masks[k];
        } else {
            index &= ~masks[k];
        }
        sub >>= 1;
    }
    return index;
}

}  // namespace

PureState::PureState(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits < 1) {
        throw ShapeError("a state needs at least one qubit");
    }
    if (n_qubits > kMaxQubits) {
        throw SizeError("register of " + std::to_string(n_qubits) + " qubits exceeds the 5-qubit limit");
    }
    if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
        throw ShapeError("amplitude count does not equal 2^n_qubits");
    }
}

PureState PureState::basis(int n_qubits, std::size_t index) {
    std::vector<cplx> amps(std::size_t{1} << std::clamp(n_qubits, 1, kMaxQubits));
    if (index >= amps.size()) {
        throw ShapeError("basis index out of range");
    }
    amps[index] = 1.0;
    return PureState(n_qubits, std::move(amps));
}

PureState PureState::from_bits(std::string_view bits) {
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("basis label must contain only 0 and 1");
        }
        index = (index << 1) | (c == '1');
    }
    return basis(static_cast<int>(bits.size()), index);
}

double PureState::norm() const {
    double t = 0;
    for (const auto &a : amplitudes_) {
        t += std::norm(a);
    }
    return std::sqrt(t);
}

PureState PureState::normalized() const {
    double n = norm();
    if (n == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    std::vector<cplx> out(amplitudes_);
    for (auto &a : out) {
        a /= n;
    }
    return PureState(n_qubits_, std::move(out));
}

cplx inner(const PureState &a, const PureState &b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("inner product of states with different dimensions");
    }
    cplx t{};
    for (std::size_t k = 0; k < a.dim(); k++) {
        t += std::conj(a[k]) * b[k];
    }
    return t;
}

LinearOp::LinearOp(CMatrix matrix) : n_qubits_(0), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw ShapeError("operator matrix must be square");
    }
    n_qubits_ = checked_qubit_count(matrix_.rows());
}

bool LinearOp::is_unitary(double tol) const {
    return max_abs_diff(matrix_.adjoint() * matrix_, CMatrix::identity(matrix_.rows())) <= tol;
}

LinearOp operator*(const LinearOp &a, const LinearOp &b) {
    if (a.n_qubits_ != b.n_qubits_) {
        throw ShapeError("operator product of different register sizes");
    }
    return LinearOp(a.matrix_ * b.matrix_);
}

PureState tensor(const PureState &a, const PureState &b) {
    int n = a.n_qubits() + b.n_qubits();
    if (n > kMaxQubits) {
        throw SizeError("tensor product of " + std::to_string(n) + " qubits exceeds the 5-qubit limit");
    }
    std::vector<cplx> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return PureState(n, std::move(out));
}

PureState apply(const LinearOp &op, std::span<const int> targets, const PureState &s) {
    if (static_cast<int>(targets.size()) != op.n_qubits()) {
        throw ShapeError("operator acts on " + std::to_string(op.n_qubits()) + " qubits but " +
                         std::to_string(targets.size()) + " targets were given");
    }
    auto masks = target_masks(s.n_qubits(), targets);
    const CMatrix &m = op.matrix();
    std::vector<cplx> out(s.dim());
    for (std::size_t i = 0; i < s.dim(); i++) {
        std::size_t row = gather(i, masks);
        cplx t{};
        for (std::size_t col = 0; col < m.cols(); col++) {
            t += m(row, col) * s[scatter(i, col, masks)];
        }
        out[i] = t;
    }
    return PureState(s.n_qubits(), std::move(out));
}

Projection project(const PureState &s, std::span<const int> targets, const PureState &onto) {
    if (onto.n_qubits() != static_cast<int>(targets.size())) {
        throw ShapeError("projection vector does not span the target qubits");
    }
    int rest = s.n_qubits() - static_cast<int>(targets.size());
    if (rest < 1) {
        throw ShapeError("projection must leave at least one qubit unmeasured");
    }
    auto masks = target_masks(s.n_qubits(), targets);
    std::vector<std::size_t> rest_masks;
    for (int q = 1; q <= s.n_qubits(); q++) {
        std::size_t m = std::size_t{1} << (s.n_qubits() - q);
        if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
            rest_masks.push_back(m);
        }
    }

    std::vector<cplx> raw(std::size_t{1} << rest);
    for (std::size_t r = 0; r < raw.size(); r++) {
        std::size_t base = scatter(0, r, rest_masks);
        cplx t{};
        for (std::size_t j = 0; j < onto.dim(); j++) {
            t += std::conj(onto[j]) * s[scatter(base, j, masks)];
        }
        raw[r] = t;
    }

    Projection p{0, PureState(rest, std::move(raw)), std::nullopt};
    double n = p.raw.norm();
    p.probability = n * n;
    if (p.probability > kZeroProbability) {
        p.residual = p.raw.normalized();
    }
    return p;
}

}  // namespace telechan
