// Copyright 2026 The majex Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "majex/errors.hpp"
#include "majex/pauli.hpp"
#include "majex/simulate.hpp"
#include "majex/statevec.hpp"
#include "oracle.hpp"

using namespace majex;

namespace {

const std::vector<GateKind> kSingle = {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::S, GateKind::Sdg};

StateVector basis_state(int n, std::size_t index) {
    std::vector<cplx> a(std::size_t{1} << n);
    a[index] = 1.0;
    return StateVector::from_amplitudes(a);
}

TEST(NewState, OneQubitIsKetZero) {
    StateVector s(1);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.amplitudes()[0], cplx(1.0));
    EXPECT_EQ(s.amplitudes()[1], cplx(0.0));
}

TEST(NewState, ThreeQubitsHasUnitAmplitudeAtZero) {
    StateVector s(3);
    ASSERT_EQ(s.size(), 8u);
    EXPECT_EQ(s.amplitudes()[0], cplx(1.0));
    for (std::size_t i = 1; i < 8; ++i) {
        EXPECT_EQ(s.amplitudes()[i], cplx(0.0));
    }
}

TEST(NewState, CapacityBounds) {
    EXPECT_THROW(StateVector(25), CapacityError);
    EXPECT_THROW(StateVector(0), CapacityError);
    EXPECT_NO_THROW(StateVector{kMaxDenseQubits});
}

TEST(FromAmplitudes, RejectsBadShapesAndZeroNorm) {
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), ShapeError);
    EXPECT_THROW(StateVector::from_amplitudes({1.0}), ShapeError);
    EXPECT_THROW(StateVector::from_amplitudes({0.0, 0.0}), InvalidStateError);
    const auto s = StateVector::from_amplitudes({3.0, 4.0});
    EXPECT_NEAR(s.norm(), 1.0, 1e-15);
}

TEST(ApplyGate, CnotTruthTable) {
    // Control qubit 0 set, target qubit 1 clear: index 1 -> index 3.
    StateVector s = basis_state(2, 1);
    s.apply(Gate::cx(0, 1));
    EXPECT_NEAR(std::abs(s.amplitudes()[3]), 1.0, 1e-15);
}

TEST(ApplyGate, HadamardMakesPlus) {
    StateVector s(1);
    s.apply(Gate::single(GateKind::H, 0));
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(s.amplitudes()[0].real(), r, 1e-15);
    EXPECT_NEAR(s.amplitudes()[1].real(), r, 1e-15);
}

TEST(ApplyGate, HadamardConjugatedCnotReversesDirection) {
    // Qubit 1 set (index 2). CNOT(1 -> 0) gives index 3.
    const std::vector<Gate> seq = {Gate::single(GateKind::H, 0), Gate::single(GateKind::H, 1), Gate::cx(0, 1),
                                   Gate::single(GateKind::H, 0), Gate::single(GateKind::H, 1)};
    StateVector s = basis_state(2, 2);
    for (const auto &g : seq) {
        s.apply(g);
    }
    EXPECT_NEAR(std::abs(s.amplitudes()[3]), 1.0, 1e-12);
    EXPECT_TRUE(oracle::unitary(seq, 2).isApprox(oracle::cnot(1, 0, 2), 1e-12));
}

TEST(ApplyGate, InvalidOperandIsBoundsError) {
    StateVector s(2);
    EXPECT_THROW(s.apply(Gate::single(GateKind::H, 2)), BoundsError);
    EXPECT_THROW(s.apply(Gate::single(GateKind::H, -1)), BoundsError);
    EXPECT_THROW(s.apply(Gate::cx(0, 5)), BoundsError);
}

TEST(ApplyGate, EveryKindIsUnitary) {
    for (GateKind k : kSingle) {
        const Mat2 m = gate_matrix(k);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                cplx dot = 0.0;
                for (int j = 0; j < 2; ++j) {
                    dot += m[2 * r + j] * std::conj(m[2 * c + j]);
                }
                EXPECT_NEAR(std::abs(dot - cplx(r == c ? 1.0 : 0.0)), 0.0, 1e-12) << mnemonic(k);
            }
        }
    }
}

TEST(ApplyGate, MatchesDenseOracleOnRandomStates) {
    Rng rng(5);
    const int n = 3;
    for (int trial = 0; trial < 5; ++trial) {
        for (GateKind k : kSingle) {
            for (int q = 0; q < n; ++q) {
                StateVector s = random_state(n, rng);
                const oracle::Vec expect = oracle::gate_unitary(Gate::single(k, q), n) * oracle::to_vec(s);
                s.apply(Gate::single(k, q));
                EXPECT_TRUE(oracle::to_vec(s).isApprox(expect, 1e-12)) << mnemonic(k) << " on " << q;
            }
        }
        for (int c = 0; c < n; ++c) {
            for (int t = 0; t < n; ++t) {
                if (c == t) {
                    continue;
                }
                StateVector s = random_state(n, rng);
                const oracle::Vec expect = oracle::cnot(c, t, n) * oracle::to_vec(s);
                s.apply(Gate::cx(c, t));
                EXPECT_TRUE(oracle::to_vec(s).isApprox(expect, 1e-12));
            }
        }
    }
}

TEST(ApplyGate, NormPreservedOverLongSequences) {
    Rng rng(9);
    StateVector s = random_state(6, rng);
    std::uniform_int_distribution<int> q(0, 5), kind(0, 6);
    for (int i = 0; i < 2000; ++i) {
        const int k = kind(rng);
        if (k == 6) {
            const int c = q(rng);
            const int t = (c + 1 + q(rng) % 5) % 6;
            s.apply(Gate::cx(c, t));
        } else {
            s.apply(Gate::single(kSingle[k], q(rng)));
        }
    }
    EXPECT_LT(std::abs(s.norm() - 1.0), 1e-9);
}

TEST(MeasureZ, KetZeroAlwaysZeroAndUnchanged) {
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        StateVector s(1);
        EXPECT_EQ(s.measure_z(0, rng), 0);
        EXPECT_EQ(s.amplitudes()[0], cplx(1.0));
    }
}

TEST(MeasureZ, BornRuleOnPlusWithinThreeSigma) {
    Rng rng(2024);
    const int trials = 100000;
    int ones = 0;
    for (int i = 0; i < trials; ++i) {
        StateVector s(1);
        s.apply(Gate::single(GateKind::H, 0));
        ones += s.measure_z(0, rng);
    }
    const double sigma = std::sqrt(0.25 / trials);
    EXPECT_LT(std::abs(ones / double(trials) - 0.5), 3 * sigma);
}

TEST(MeasureZ, BornRuleOnSkewedStateWithinThreeSigma) {
    Rng rng(77);
    const double p1 = 0.2;
    const int trials = 100000;
    int ones = 0;
    for (int i = 0; i < trials; ++i) {
        auto s = StateVector::from_amplitudes({std::sqrt(1 - p1), cplx(0, std::sqrt(p1))});
        ones += s.measure_z(0, rng);
    }
    EXPECT_LT(std::abs(ones / double(trials) - p1), 3 * std::sqrt(p1 * (1 - p1) / trials));
}

TEST(MeasureZ, BellMinusOutcomesAlwaysAgree) {
    Rng rng(3);
    const double r = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 500; ++i) {
        auto s = StateVector::from_amplitudes({r, 0.0, 0.0, -r});
        const int a = s.measure_z(0, rng);
        const int b = s.measure_z(1, rng);
        EXPECT_EQ(a, b);
    }
}

TEST(MeasureZ, CollapseOfImpossibleOutcomeThrows) {
    StateVector s(1);
    EXPECT_THROW(s.collapse(0, 1), ImpossibleOutcomeError);
}

TEST(Expectation, SpecExamples) {
    EXPECT_NEAR(StateVector(1).expectation(PauliOperator::from_string("Z")), 1.0, 1e-15);
    const double r = 1.0 / std::sqrt(2.0);
    const auto bell = StateVector::from_amplitudes({r, 0.0, 0.0, r});
    EXPECT_NEAR(bell.expectation(PauliOperator::from_string("XX")), 1.0, 1e-12);
    EXPECT_NEAR(bell.expectation(PauliOperator::from_string("YY")), -1.0, 1e-12);
    EXPECT_NEAR(bell.expectation(PauliOperator::from_string("-ZZ")), -1.0, 1e-12);
}

TEST(Expectation, WidthMismatchIsShapeError) {
    EXPECT_THROW(StateVector(2).expectation(PauliOperator::from_string("Z")), ShapeError);
}

TEST(Expectation, MatchesDenseOracleForAllThreeQubitPaulis) {
    Rng rng(8);
    const StateVector s = random_state(3, rng);
    const oracle::Vec v = oracle::to_vec(s);
    const std::string letters = "IXYZ";
    for (int code = 0; code < 64; ++code) {
        std::string p;
        for (int q = 0; q < 3; ++q) {
            p += letters[(code >> (2 * q)) & 3];
        }
        const cplx expect = v.dot(oracle::pauli(p) * v);
        EXPECT_NEAR(s.expectation(PauliOperator::from_string(p)), expect.real(), 1e-12) << p;
        EXPECT_NEAR(expect.imag(), 0.0, 1e-12);
    }
}

TEST(Project, ZZOnKetZeroZero) {
    StateVector s(2);
    EXPECT_NEAR(s.project(PauliOperator::from_string("ZZ"), 0), 1.0, 1e-15);
    EXPECT_EQ(s.amplitudes()[0], cplx(1.0));
}

TEST(Project, YYOnThreeQubitZero) {
    // Y on qubits 0 and 1 of |000>: (I + YY)/2 |000> = (|000> - |110>)/2.
    StateVector s(3);
    EXPECT_NEAR(s.project(PauliOperator::from_string("YYI"), 0), 0.5, 1e-12);
    const double r = 1.0 / std::sqrt(2.0);
    const auto expect = StateVector::from_amplitudes({r, 0, 0, -r, 0, 0, 0, 0});
    EXPECT_GT(fidelity(s, expect), 1 - 1e-12);
}

TEST(Project, OddParityOfKetZeroZeroIsImpossible) {
    StateVector s(2);
    EXPECT_THROW(s.project(PauliOperator::from_string("ZZ"), 1), ImpossibleOutcomeError);
}

TEST(Project, MatchesDenseProjector) {
    Rng rng(21);
    for (const char *p : {"XYZ", "YIY", "ZZI", "-XXX", "IYI"}) {
        for (int sign : {0, 1}) {
            StateVector s = random_state(3, rng);
            const oracle::Mat P = oracle::pauli(p);
            const oracle::Mat proj = 0.5 * (oracle::Mat::Identity(8, 8) + (sign ? -1.0 : 1.0) * P);
            const oracle::Vec out = proj * oracle::to_vec(s);
            EXPECT_NEAR(s.projector_probability(PauliOperator::from_string(p), sign), out.squaredNorm(), 1e-12);
            EXPECT_NEAR(s.project(PauliOperator::from_string(p), sign), out.squaredNorm(), 1e-12);
            EXPECT_GT(oracle::fidelity(oracle::to_vec(s), out), 1 - 1e-12);
        }
    }
}

TEST(Pauli, CommutationAgreesWithMatricesOnAll256TwoQubitPairs) {
    const std::string letters = "IXYZ";
    for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
            const std::string pa{letters[a & 3], letters[a >> 2]};
            const std::string pb{letters[b & 3], letters[b >> 2]};
            const oracle::Mat ma = oracle::pauli(pa), mb = oracle::pauli(pb);
            const bool commute = (ma * mb - mb * ma).norm() < 1e-12;
            if (!commute) {
                EXPECT_LT((ma * mb + mb * ma).norm(), 1e-12);
            }
            EXPECT_EQ(PauliOperator::from_string(pa).commutes(PauliOperator::from_string(pb)), commute)
                << pa << " " << pb;
        }
    }
}

TEST(Pauli, ProductPhaseMatchesMatrices) {
    const std::string letters = "IXYZ";
    const cplx ipow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
            const std::string pa{letters[a & 3], letters[a >> 2]};
            const std::string pb{'-', letters[b & 3], letters[b >> 2]};
            const auto [k, c] = multiply(PauliOperator::from_string(pa), PauliOperator::from_string(pb));
            EXPECT_FALSE(c.negative());
            const oracle::Mat expect = oracle::pauli(pa) * oracle::pauli(pb);
            EXPECT_TRUE(expect.isApprox(ipow[k] * oracle::pauli(c.str()), 1e-12)) << pa << " * " << pb;
        }
    }
}

TEST(Pauli, EverySquareIsIdentity) {
    for (const char *p : {"XYZ", "-YIY", "ZZZZ", "Y"}) {
        const auto op = PauliOperator::from_string(p);
        const auto sq = op * op;
        EXPECT_TRUE(sq.is_identity());
        EXPECT_FALSE(sq.negative());
    }
}

TEST(Pauli, AnticommutingProductThrowsAndWidthMismatch) {
    EXPECT_THROW(PauliOperator::from_string("X") * PauliOperator::from_string("Z"), std::domain_error);
    EXPECT_THROW(PauliOperator::from_string("X").commutes(PauliOperator::from_string("XX")), ShapeError);
}

TEST(Pauli, WideOperatorsAcrossWordBoundary) {
    auto a = PauliOperator::on(130, 'X', {0, 64, 129});
    auto b = PauliOperator::on(130, 'Z', {129});
    EXPECT_FALSE(a.commutes(b));
    b.set(64, 'Z');
    EXPECT_TRUE(a.commutes(b));
    EXPECT_EQ(a.weight(), 3u);
    EXPECT_EQ(a.restricted({129, 64}).str(), "+XX");
}

TEST(Pauli, SymplecticRank) {
    std::vector<PauliOperator> ops = {PauliOperator::from_string("ZZI"), PauliOperator::from_string("IZZ"),
                                      PauliOperator::from_string("-ZIZ")};
    EXPECT_EQ(symplectic_rank(ops), 2u);
    ops.push_back(PauliOperator::from_string("XXX"));
    EXPECT_EQ(symplectic_rank(ops), 3u);
}

TEST(Pauli, StringRoundTripAndParseErrors) {
    EXPECT_EQ(PauliOperator::from_string("-XIYZ").str(), "-XIYZ");
    EXPECT_EQ(PauliOperator::from_string("XY").str(), "+XY");
    EXPECT_THROW(PauliOperator::from_string("XQ"), std::invalid_argument);
}

TEST(States, EmbedAndFidelity) {
    Rng rng(4);
    const StateVector local = random_state(2, rng);
    const std::vector<int> where = {3, 1};
    const StateVector wide = embed(local, 4, where);
    // Swap roles: local qubit 0 -> 3, local qubit 1 -> 1.
    for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t wi = ((i & 1) << 3) | ((i >> 1) << 1);
        EXPECT_NEAR(std::abs(wide.amplitudes()[wi] - local.amplitudes()[i]), 0.0, 1e-15);
    }
    EXPECT_NEAR(fidelity(local, local), 1.0, 1e-12);
    EXPECT_THROW(fidelity(local, wide), ShapeError);
}

TEST(Determinism, SameSeedSameShotsAnyThreadCount) {
    Circuit c(3, 3);
    c.gate(GateKind::H, 0).cx(0, 1).gate(GateKind::H, 2).measure(0, 0).measure(1, 1).measure(2, 2);
    const auto a = run_shots(c, 2000, std::nullopt, 99, 1);
    const auto b = run_shots(c, 2000, std::nullopt, 99, 4);
    const auto d = run_shots(c, 2000, std::nullopt, 100, 1);
    EXPECT_EQ(a, b);
    EXPECT_NE(a.records, d.records);
    EXPECT_THROW(run_shots(c, 0, std::nullopt, 1), std::invalid_argument);
}

TEST(ExactDistribution, MatchesDenseOracle) {
    Circuit c(3, 2);
    c.gate(GateKind::H, 0).cx(0, 1).gate(GateKind::Sdg, 1).gate(GateKind::H, 1).cx(1, 2).measure(2, 0).reset(2);
    c.gate(GateKind::H, 2).measure(0, 1);
    const auto got = exact_distribution(c);
    const auto want = oracle::distribution(c, oracle::zero_state(3));
    EXPECT_LT(total_variation(got, want), 1e-12);
}

}  // namespace
