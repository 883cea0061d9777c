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

#include <gtest/gtest.h>

#include <cmath>

#include "telechan/bases.h"
#include "telechan/random.h"

namespace telechan {
namespace {

const double kR = 1.0 / std::sqrt(2.0);

void expect_amplitudes(const PureState &s, const std::vector<cplx> &want, double tol = 1e-14) {
    ASSERT_EQ(s.dim(), want.size());
    for (std::size_t i = 0; i < want.size(); i++) {
        EXPECT_NEAR(std::abs(s[i] - want[i]), 0.0, tol) << "index " << i;
    }
}

TEST(PureState, RejectsBadShapes) {
    EXPECT_THROW(PureState(0, {}), ShapeError);
    EXPECT_THROW(PureState(6, std::vector<cplx>(64)), SizeError);
    EXPECT_THROW(PureState(2, std::vector<cplx>(3)), ShapeError);
    EXPECT_THROW(PureState::from_bits("012"), std::invalid_argument);
}

TEST(PureState, ParticleOneIsMostSignificant) {
    PureState s = PureState::from_bits("100");
    EXPECT_EQ(s[4], cplx(1));
    EXPECT_EQ(PureState::basis(3, 4), s);
}

TEST(PureState, NormalizeRejectsZero) {
    EXPECT_THROW(PureState(1, {0, 0}).normalized(), std::domain_error);
    EXPECT_NEAR(PureState(1, {3, 4}).normalized().norm(), 1.0, 1e-12);
}

TEST(Tensor, BasisStates) {
    expect_amplitudes(tensor(PureState::from_bits("0"), PureState::from_bits("0")), {1, 0, 0, 0});
}

TEST(Tensor, DiagonalInputWithGhzChannel) {
    cplx alpha(0.6, 0.1), gamma(-0.3, 0.7);
    PureState input(2, {alpha, 0, 0, gamma});
    PureState ghz(3, {kR, 0, 0, 0, 0, 0, 0, kR});
    PureState omega = tensor(input, ghz);
    ASSERT_EQ(omega.n_qubits(), 5);
    // Direct Kronecker oracle.
    for (std::size_t i = 0; i < 32; i++) {
        EXPECT_NEAR(std::abs(omega[i] - input[i >> 3] * ghz[i & 7]), 0.0, 1e-15);
    }
    EXPECT_NEAR(std::abs(omega[0b00000] - alpha * kR), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(omega[0b00111] - alpha * kR), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(omega[0b11000] - gamma * kR), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(omega[0b11111] - gamma * kR), 0.0, 1e-15);
}

TEST(Tensor, AppendZeroQubit) {
    expect_amplitudes(tensor(bell_state(BellLabel::kPhiPlus), PureState::from_bits("0")),
                      {kR, 0, 0, 0, 0, 0, kR, 0});
}

TEST(Tensor, SizeLimit) {
    EXPECT_THROW(tensor(PureState::basis(3, 0), PureState::basis(3, 0)), SizeError);
}

TEST(Tensor, Associative) {
    auto rng = make_rng(1);
    for (int n = 0; n < 20; n++) {
        PureState a = random_state(rng, 1), b = random_state(rng, 2), c = random_state(rng, 2);
        PureState left = tensor(tensor(a, b), c), right = tensor(a, tensor(b, c));
        for (std::size_t i = 0; i < left.dim(); i++) {
            EXPECT_NEAR(std::abs(left[i] - right[i]), 0.0, 1e-14);
        }
    }
}

TEST(Apply, HadamardOnZero) {
    const std::array<int, 1> t = {1};
    expect_amplitudes(apply(hadamard(), t, PureState::from_bits("0")), {kR, kR});
}

TEST(Apply, HadamardSquared) {
    const std::array<int, 1> t = {1};
    PureState one = PureState::from_bits("1");
    expect_amplitudes(apply(hadamard(), t, apply(hadamard(), t, one)), {0, 1});
}

TEST(Apply, CnotOnEmbeddedPair) {
    // Particles 4,5 as qubits 4,5 of a five-qubit register.
    const std::array<int, 2> t = {4, 5};
    PureState s = PureState::from_bits("00010");
    EXPECT_EQ(apply(cnot(), t, s), PureState::from_bits("00011"));
    const std::array<int, 2> reversed = {5, 4};
    EXPECT_EQ(apply(cnot(), reversed, PureState::from_bits("00001")), PureState::from_bits("00011"));
}

TEST(Apply, ShapeErrors) {
    const std::array<int, 1> one = {1};
    const std::array<int, 2> dup = {1, 1};
    const std::array<int, 1> out_of_range = {3};
    PureState s = PureState::basis(2, 0);
    EXPECT_THROW(apply(cnot(), one, s), ShapeError);
    EXPECT_THROW(apply(cnot(), dup, s), ShapeError);
    EXPECT_THROW(apply(hadamard(), out_of_range, s), ShapeError);
}

TEST(Apply, UnitaryPreservesNorm) {
    auto rng = make_rng(2);
    for (int n = 0; n < 50; n++) {
        PureState s = random_state(rng, 5);
        std::array<int, 2> t = {1 + n % 5, 1 + (n + 2) % 5};
        EXPECT_NEAR(apply(cnot(), t, s).norm(), 1.0, 1e-12);
        std::array<int, 1> h = {1 + n % 5};
        EXPECT_NEAR(apply(hadamard(), h, s).norm(), 1.0, 1e-12);
    }
}

TEST(Apply, Linear) {
    auto rng = make_rng(3);
    const std::array<int, 2> t = {2, 4};
    LinearOp op = cnot() * LinearOp(kron(hadamard().matrix(), pauli_x().matrix()));
    for (int n = 0; n < 20; n++) {
        PureState a = random_state(rng, 4), b = random_state(rng, 4);
        cplx ca = gaussian_complex(rng), cb = gaussian_complex(rng);
        std::vector<cplx> mix(16);
        for (std::size_t i = 0; i < 16; i++) {
            mix[i] = ca * a[i] + cb * b[i];
        }
        PureState lhs = apply(op, t, PureState(4, mix));
        PureState ra = apply(op, t, a), rb = apply(op, t, b);
        for (std::size_t i = 0; i < 16; i++) {
            EXPECT_NEAR(std::abs(lhs[i] - (ca * ra[i] + cb * rb[i])), 0.0, 1e-13);
        }
    }
}

TEST(Project, OntoItself) {
    PureState s = tensor(bell_state(BellLabel::kPhiPlus), PureState::from_bits("1"));
    const std::array<int, 2> t = {1, 2};
    Projection p = project(s, t, bell_state(BellLabel::kPhiPlus));
    EXPECT_NEAR(p.probability, 1.0, 1e-14);
    ASSERT_TRUE(p.residual);
    expect_amplitudes(*p.residual, {0, 1});
}

TEST(Project, OrthogonalGivesFlaggedEmptyResidual) {
    PureState s = PureState::from_bits("001");
    const std::array<int, 2> t = {1, 2};
    Projection p = project(s, t, bell_state(BellLabel::kPsiPlus));
    EXPECT_EQ(p.probability, 0.0);
    EXPECT_FALSE(p.residual);
}

TEST(Project, MeasuresEverythingIsRejected) {
    const std::array<int, 1> t = {1};
    EXPECT_THROW(project(PureState::from_bits("0"), t, PureState::from_bits("0")), ShapeError);
}

TEST(Project, FirstBraceOfPlainExpansion) {
    cplx alpha(0.8, 0), gamma(0, 0.6);
    PureState omega = tensor(PureState(2, {alpha, 0, 0, gamma}), PureState(3, {kR, 0, 0, 0, 0, 0, 0, kR}));
    const std::array<int, 2> t = {2, 3};
    Projection p = project(omega, t, bell_state(BellLabel::kPhiPlus));
    // Remaining qubits (1,4,5). With beta = delta = 0 the |0>_1 part is
    // alpha a|00> / sqrt(2N) and the |1>_1 part is gamma h|11> / sqrt(2N).
    std::vector<cplx> want(8);
    want[0b000] = alpha * 0.5;
    want[0b111] = gamma * 0.5;
    expect_amplitudes(p.raw, want);
    EXPECT_NEAR(p.probability, 0.25, 1e-14);
}

TEST(Project, CompletenessOverBellBasis) {
    auto rng = make_rng(4);
    for (int n = 0; n < 50; n++) {
        PureState s = random_state(rng, 5);
        std::array<int, 2> t = {1 + n % 5, 1 + (n + 3) % 5};
        double total = 0;
        for (auto label : kBellLabels) {
            total += project(s, t, bell_state(label)).probability;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(Project, LinearInInput) {
    auto rng = make_rng(5);
    const std::array<int, 2> t = {3, 1};
    PureState onto = random_state(rng, 2);
    for (int n = 0; n < 20; n++) {
        PureState a = random_state(rng, 4), b = random_state(rng, 4);
        cplx ca = gaussian_complex(rng), cb = gaussian_complex(rng);
        std::vector<cplx> mix(16);
        for (std::size_t i = 0; i < 16; i++) {
            mix[i] = ca * a[i] + cb * b[i];
        }
        PureState lhs = project(PureState(4, mix), t, onto).raw;
        PureState ra = project(a, t, onto).raw, rb = project(b, t, onto).raw;
        for (std::size_t i = 0; i < 4; i++) {
            EXPECT_NEAR(std::abs(lhs[i] - (ca * ra[i] + cb * rb[i])), 0.0, 1e-13);
        }
    }
}

TEST(LinearOp, Unitarity) {
    EXPECT_TRUE(hadamard().is_unitary());
    EXPECT_TRUE(cnot().is_unitary());
    CMatrix m(2, 2);
    m(0, 0) = 1;
    m(1, 1) = 2;
    EXPECT_FALSE(LinearOp(m).is_unitary());
    EXPECT_THROW(LinearOp(CMatrix(3, 3)), ShapeError);
}

}  // namespace
}  // namespace telechan
