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

#ifndef TELECHAN_STATEVEC_H
#define TELECHAN_STATEVEC_H

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "telechan/linalg.h"

namespace telechan {

inline constexpr int kMaxQubits = 5;

/// Register would exceed kMaxQubits.
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

/// Operator, target list or state dimensions do not agree.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Pure state of 1..5 qubits.
///
/// Qubits are labelled 1..n. Qubit i lives at bit position (n - i) of the
/// amplitude index, i.e. qubit 1 is the most significant bit. The amplitudes
/// are not required to be normalized; `normalized()` produces a unit vector.
class PureState {
   public:
    PureState(int n_qubits, std::vector<cplx> amplitudes);

    /// Computational basis state |bits>, e.g. from_bits("010").
    static PureState from_bits(std::string_view bits);
    static PureState basis(int n_qubits, std::size_t index);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    cplx operator[](std::size_t index) const { return amplitudes_[index]; }

    double norm() const;
    /// Throws std::domain_error for the zero vector.
    PureState normalized() const;

    /// Exact amplitude equality; see equal_up_to_phase for physical equality.
    friend bool operator==(const PureState &, const PureState &) = default;

   private:
    int n_qubits_;
    std::vector<cplx> amplitudes_;
};

/// <a|b>.
cplx inner(const PureState &a, const PureState &b);

/// Square operator on a register of `n_qubits` qubits.
class LinearOp {
   public:
    explicit LinearOp(CMatrix matrix);

    int n_qubits() const { return n_qubits_; }
    const CMatrix &matrix() const { return matrix_; }
    bool is_unitary(double tol = 1e-12) const;

    friend LinearOp operator*(const LinearOp &a, const LinearOp &b);

   private:
    int n_qubits_;
    CMatrix matrix_;
};

/// Kronecker product a (x) b. Qubits of `b` follow those of `a`.
PureState tensor(const PureState &a, const PureState &b);

/// Applies `op` to the listed qubits. targets[0] is the most significant
/// qubit of the operator's own index space.
PureState apply(const LinearOp &op, std::span<const int> targets, const PureState &s);

struct Projection {
    /// Squared norm of the partial inner product.
    double probability = 0;
    /// Unnormalized partial inner product <onto|s> over the remaining qubits.
    PureState raw;
    /// raw renormalized; empty when the branch has zero probability.
    std::optional<PureState> residual;
};

/// Probabilities at or below this are treated as an impossible branch.
inline constexpr double kZeroProbability = 1e-24;

/// Projects the target qubits of `s` onto `onto` (which spans exactly the
/// targets, targets[0] most significant). The remaining qubits keep their
/// relative order.
Projection project(const PureState &s, std::span<const int> targets, const PureState &onto);

}  // namespace telechan

#endif  // TELECHAN_STATEVEC_H
