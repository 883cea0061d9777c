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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "telechan/classify.h"
#include "telechan/random.h"

namespace telechan {
namespace {

constexpr std::array<int, 2> kBob = {1, 2};

TEST(CorrectionOp, IndexRoundTripAndOrder) {
    auto all = all_corrections();
    for (int i = 0; i < kNumCorrections; i++) {
        EXPECT_EQ(all[i].index(), i);
        EXPECT_EQ(CorrectionOp::from_index(i), all[i]);
    }
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_TRUE(all[0].is_identity());
    EXPECT_FALSE(all[0].cnot);
    EXPECT_TRUE(all[16].cnot);
}

TEST(CorrectionOp, AllUnitaryAndDistinctUpToPhase) {
    auto all = all_corrections();
    for (const auto &op : all) {
        EXPECT_TRUE(realize(op).is_unitary(1e-13));
    }
    for (int i = 0; i < kNumCorrections; i++) {
        for (int j = i + 1; j < kNumCorrections; j++) {
            EXPECT_FALSE(proportional(realize(all[i]).matrix(), realize(all[j]).matrix(), 1e-12));
        }
    }
}

TEST(CorrectionOp, LocalNames) {
    for (auto l : kLocals) {
        EXPECT_EQ(parse_local(local_name(l)), l);
    }
    EXPECT_FALSE(parse_local("Y"));
}

TEST(Realize, Identity) {
    EXPECT_LE(max_abs_diff(realize(CorrectionOp{}).matrix(), CMatrix::identity(4)), 0);
}

TEST(Realize, XXSwapsDiagonalFamily) {
    cplx alpha(0.6, 0), gamma(0, 0.8);
    PureState collapsed(2, {gamma, 0, 0, alpha});
    PureState out = apply(realize(CorrectionOp{false, Local::kX, Local::kX}), kBob, collapsed);
    EXPECT_EQ(out, PureState(2, {alpha, 0, 0, gamma}));
}

TEST(Realize, CnotFlipsTarget) {
    PureState out = apply(realize(CorrectionOp{true, Local::kI, Local::kI}), kBob, PureState::from_bits("10"));
    EXPECT_EQ(out, PureState::from_bits("11"));
}

TEST(Realize, CnotActsBeforeLocals) {
    CorrectionOp op{true, Local::kX, Local::kZ};
    CMatrix want = kron(pauli_x().matrix(), pauli_z().matrix()) * cnot().matrix();
    EXPECT_LE(max_abs_diff(realize(op).matrix(), want), 1e-15);
}

TEST(Realize, ZXIsPhaseOfY) {
    CMatrix zx = local_matrix(Local::kZX);
    CMatrix y(2, 2);
    y(0, 1) = cplx(0, -1);
    y(1, 0) = cplx(0, 1);
    EXPECT_TRUE(proportional(zx, y, 1e-15));
}

TEST(Realize, InverseOperationsTable) {
    // Each of the four canonical two-qubit corruptions of the diagonal
    // family is undone by the matching local operator.
    cplx a(0.6, 0.1), g(-0.2, 0.77);
    PureState target(2, {a, 0, 0, g});
    const std::vector<std::pair<PureState, CorrectionOp>> cases = {
        {PureState(2, {a, 0, 0, -g}), CorrectionOp{false, Local::kZ, Local::kI}},
        {PureState(2, {g, 0, 0, a}), CorrectionOp{false, Local::kX, Local::kX}},
        {PureState(2, {-g, 0, 0, a}), CorrectionOp{false, Local::kZX, Local::kX}},
        {PureState(2, {a, 0, g, 0}), CorrectionOp{true, Local::kI, Local::kI}},
    };
    for (const auto &[collapsed, op] : cases) {
        EXPECT_TRUE(equal_up_to_phase(apply(realize(op), kBob, collapsed.normalized()), target.normalized(), 1e-12))
            << instruction_string(op);
    }
}

TEST(EqualUpToPhase, Basics) {
    PureState s(2, {0.6, 0, 0, cplx(0, 0.8)});
    PureState minus(2, {-0.6, 0, 0, cplx(0, -0.8)});
    EXPECT_TRUE(equal_up_to_phase(s, minus, 1e-12));
    EXPECT_FALSE(equal_up_to_phase(bell_state(BellLabel::kPhiPlus), bell_state(BellLabel::kPhiMinus), 1e-12));
    EXPECT_THROW(equal_up_to_phase(PureState(2, std::vector<cplx>(4)), s, 1e-12), std::domain_error);
}

TEST(EqualUpToPhase, ZOnFourRestoresSign) {
    PureState collapsed(2, {0.6, 0, 0, -0.8});
    PureState out = apply(realize(CorrectionOp{false, Local::kZ, Local::kI}), kBob, collapsed);
    EXPECT_TRUE(equal_up_to_phase(out, PureState(2, {0.6, 0, 0, 0.8}), 1e-12));
}

TEST(Proportional, ScaleAndTolerance) {
    CMatrix a = CMatrix::identity(2);
    CMatrix b = a;
    b *= cplx(0, 2);
    cplx scale;
    EXPECT_TRUE(proportional(b, a, 1e-12, &scale));
    EXPECT_NEAR(std::abs(scale - cplx(0, 2)), 0, 1e-15);
    EXPECT_FALSE(proportional(CMatrix(2, 2), a, 1e-12));
    b(0, 1) = 1e-6;
    EXPECT_FALSE(proportional(b, a, 1e-12));
}

TEST(FindCorrection, IdentityFamily) {
    InputClass diag(ClassKind::kDiag);
    auto r = find_correction(diag.target(), diag.target());
    ASSERT_EQ(r.status, CorrectionSearch::Status::kCorrected);
    EXPECT_TRUE(r.op->is_identity());
}

TEST(FindCorrection, ZeroMapIsZeroProbability) {
    InputClass diag(ClassKind::kDiag);
    auto r = find_correction(CMatrix(4, 2), diag.target());
    EXPECT_EQ(r.status, CorrectionSearch::Status::kZeroProbability);
}

TEST(FindCorrection, GhzPsiMinusZero) {
    InputClass diag(ClassKind::kDiag);
    CMatrix m = coefficient_matrix(ChannelSpec::parse("+000000+"), Outcome{BellLabel::kPsiMinus, 0}) *
                diag.embedding();
    auto r = find_correction(m, diag.target());
    ASSERT_EQ(r.status, CorrectionSearch::Status::kCorrected);
    // Collapsed family -gamma|00> + alpha|11>: an X on each particle plus a
    // relative sign.
    EXPECT_FALSE(r.op->cnot);
    EXPECT_TRUE(proportional(realize(*r.op).matrix() * m, diag.target(), 1e-12));
    EXPECT_EQ(r.op->p4, Local::kX);
}

TEST(FindCorrection, AeChannelNeedsCnot) {
    InputClass diag(ClassKind::kDiag);
    CMatrix m = coefficient_matrix(ChannelSpec::parse("+000+000"), Outcome{BellLabel::kPhiPlus, 0}) *
                diag.embedding();
    auto r = find_correction(m, diag.target());
    ASSERT_EQ(r.status, CorrectionSearch::Status::kCorrected);
    EXPECT_TRUE(r.op->cnot);
}

TEST(FindCorrection, SoundOnSampledStates) {
    auto rng = make_rng(31);
    for (const auto &cls : InputClass::all()) {
        for (const auto &tc : classify_all(cls).teleporting_channels) {
            auto maps = coefficient_matrices(tc.channel);
            for (int k = 0; k < kNumOutcomes; k++) {
                CMatrix m = maps[k] * cls.embedding();
                auto r = find_correction(m, cls.target());
                ASSERT_EQ(r.status, CorrectionSearch::Status::kCorrected);
                for (int d = 0; d < 20; d++) {
                    auto v = random_unit_vector(rng, cls.free_params());
                    CMatrix p(cls.free_params(), 1);
                    for (int j = 0; j < cls.free_params(); j++) {
                        p(j, 0) = v[j];
                    }
                    CMatrix bob = m * p, want = cls.target() * p;
                    PureState collapsed(2, {bob(0, 0), bob(1, 0), bob(2, 0), bob(3, 0)});
                    PureState target(2, {want(0, 0), want(1, 0), want(2, 0), want(3, 0)});
                    EXPECT_TRUE(equal_up_to_phase(apply(realize(*r.op), kBob, collapsed.normalized()),
                                                  target.normalized(), 1e-10));
                }
            }
        }
    }
}

TEST(FindCorrection, ProportionalityAgreesWithSampledFidelity) {
    // Cross-validation on random channels: a correction passes the linear-map
    // test exactly when it restores three random family members.
    auto rng = make_rng(32);
    for (const auto &cls : InputClass::all()) {
        for (int n = 0; n < 100; n++) {
            ChannelSpec c = random_channel(rng);
            CMatrix m = coefficient_matrix(c, Outcome::from_index(n % 8)) * cls.embedding();
            if (m.max_abs() <= 1e-12) {
                continue;
            }
            for (const auto &op : all_corrections()) {
                bool linear = proportional(realize(op).matrix() * m, cls.target(), 1e-12);
                bool sampled = true;
                for (int d = 0; d < 3 && sampled; d++) {
                    auto v = random_unit_vector(rng, cls.free_params());
                    CMatrix p(cls.free_params(), 1);
                    for (int j = 0; j < cls.free_params(); j++) {
                        p(j, 0) = v[j];
                    }
                    CMatrix bob = m * p, want = cls.target() * p;
                    PureState collapsed(2, {bob(0, 0), bob(1, 0), bob(2, 0), bob(3, 0)});
                    PureState target(2, {want(0, 0), want(1, 0), want(2, 0), want(3, 0)});
                    sampled = collapsed.norm() > 1e-9 &&
                              equal_up_to_phase(apply(realize(op), kBob, collapsed.normalized()), target.normalized(),
                                                1e-9);
                }
                EXPECT_EQ(linear, sampled) << cls.name() << " " << c.to_string() << " " << instruction_string(op);
            }
        }
    }
}

TEST(InstructionString, Spellings) {
    EXPECT_EQ(instruction_string(CorrectionOp{}), "I");
    EXPECT_EQ(instruction_string(CorrectionOp{true, Local::kI, Local::kI}), "CNOT");
    EXPECT_EQ(instruction_string(CorrectionOp{false, Local::kX, Local::kX}), "(σx)4⊗(σx)5");
}

}  // namespace
}  // namespace telechan
