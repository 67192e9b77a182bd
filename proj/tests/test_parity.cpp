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
#include "majex/parity.hpp"
#include "majex/simulate.hpp"
#include "oracle.hpp"

using namespace majex;

namespace {

constexpr ParityBasis kBases[] = {ParityBasis::XX, ParityBasis::YY, ParityBasis::ZZ};

// Data qubits 0, 1; ancilla 2; one classical bit.
Circuit measurement(ParityBasis b) {
    return parity_circuit({b, {0, 1}, 2, 0}, 3, 1);
}

TEST(ParityCircuit, ZZOnZeroIsDeterministicZero) {
    const auto d = exact_distribution(measurement(ParityBasis::ZZ));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_NEAR(d.at(0), 1.0, 1e-12);
}

TEST(ParityCircuit, ZZPreservesBellSuperposition) {
    const double r = 1.0 / std::sqrt(2.0);
    const auto bell = StateVector::from_amplitudes({r, 0, 0, r});
    StateVector s = embed(bell, 3, std::vector<int>{0, 1});
    const double p = run_forced(measurement(ParityBasis::ZZ), s, 0);
    EXPECT_NEAR(p, 1.0, 1e-12);
    EXPECT_GT(fidelity(s, embed(bell, 3, std::vector<int>{0, 1})), 1 - 1e-12);
}

TEST(ParityCircuit, YYOnZeroGivesHalfAndBellMinus) {
    StateVector s(3);
    const double p = run_forced(measurement(ParityBasis::YY), s, 0);
    EXPECT_NEAR(p, 0.5, 1e-12);
    const double r = 1.0 / std::sqrt(2.0);
    const auto expect = embed(StateVector::from_amplitudes({r, 0, 0, -r}), 3, std::vector<int>{0, 1});
    EXPECT_GT(fidelity(s, expect), 1 - 1e-12);
}

TEST(ParityCircuit, GateStructure) {
    const Circuit zz = measurement(ParityBasis::ZZ);
    // cx v_j, cx v_i, measure, reset.
    ASSERT_EQ(zz.size(), 4u);
    EXPECT_EQ(std::get<Gate>(zz.instructions()[0]), Gate::cx(1, 2));
    EXPECT_EQ(std::get<Gate>(zz.instructions()[1]), Gate::cx(0, 2));
    EXPECT_EQ(std::get<Measure>(zz.instructions()[2]), (Measure{2, 0}));
    EXPECT_EQ(std::get<Reset>(zz.instructions()[3]), (Reset{2}));
    EXPECT_EQ(measurement(ParityBasis::XX).cnots().size(), 2u);
    EXPECT_EQ(measurement(ParityBasis::YY).cnots().size(), 2u);
}

TEST(ParityCircuit, DuplicateQubitsAreConstructionError) {
    EXPECT_THROW(parity_circuit({ParityBasis::ZZ, {0, 0}, 2, 0}, 3, 1), ConstructionError);
    EXPECT_THROW(parity_circuit({ParityBasis::XX, {0, 1}, 1, 0}, 3, 1), ConstructionError);
}

TEST(ParityCircuit, BasisRotationConjugatesLetterToZ) {
    for (char letter : {'X', 'Y', 'Z'}) {
        std::vector<Gate> rot;
        for (GateKind g : basis_rotation(letter)) {
            rot.push_back(Gate::single(g, 0));
        }
        const oracle::Mat u = oracle::unitary(rot, 1);
        EXPECT_TRUE((u * oracle::letter_matrix(letter) * u.adjoint()).isApprox(oracle::Z(), 1e-12)) << letter;
        std::vector<Gate> both = rot;
        for (GateKind g : basis_unrotation(letter)) {
            both.push_back(Gate::single(g, 0));
        }
        EXPECT_TRUE(oracle::unitary(both, 1).isApprox(oracle::I2(), 1e-12)) << letter;
    }
}

// Running the circuit and conditioning on outcome b must equal the
// projector (I + (-1)^b P)/2 applied with a dense Pauli matrix.
TEST(ParityCircuit, ProjectorEquivalenceOnTwentyRandomStates) {
    Rng rng(2016);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector data = random_state(2, rng);
        const oracle::Vec dv = oracle::to_vec(data);
        for (ParityBasis basis : kBases) {
            const std::string letters(2, pauli_letter(basis));
            const oracle::Mat P = oracle::pauli(letters);
            for (int b : {0, 1}) {
                const oracle::Vec want = 0.5 * (oracle::Mat::Identity(4, 4) + (b ? -1.0 : 1.0) * P) * dv;
                StateVector s = embed(data, 3, std::vector<int>{0, 1});
                const double p = run_forced(measurement(basis), s, b);
                ASSERT_NEAR(p, want.squaredNorm(), 1e-9) << name(basis) << " b=" << b;
                if (p > 1e-9) {
                    const oracle::Vec want3 = oracle::kron(oracle::zero_state(1), want);
                    EXPECT_GT(oracle::fidelity(oracle::to_vec(s), want3), 1 - 1e-9);
                }
                // Library projector agrees too.
                StateVector t = data;
                if (p > 1e-9) {
                    EXPECT_NEAR(t.project(parity_operator(basis, 0, 1, 2), b), p, 1e-9);
                    EXPECT_GT(oracle::fidelity(oracle::to_vec(t), want), 1 - 1e-9);
                }
            }
        }
    }
}

TEST(ParityCircuit, RepeatedMeasurementIsStable) {
    Rng rng(5);
    for (ParityBasis basis : kBases) {
        Circuit twice(3, 2);
        twice.append(parity_circuit({basis, {0, 1}, 2, 0}, 3, 2));
        twice.append(parity_circuit({basis, {0, 1}, 2, 1}, 3, 2));
        for (int trial = 0; trial < 5; ++trial) {
            const StateVector init = embed(random_state(2, rng), 3, std::vector<int>{0, 1});
            for (const auto &[rec, p] : exact_distribution(twice, &init)) {
                EXPECT_EQ(ShotTable::bit(rec, 0), ShotTable::bit(rec, 1)) << "p=" << p;
            }
        }
    }
}

TEST(ParityCircuit, XXDisturbsZZEigenstate) {
    // Edges (0, 1) and (1, 2) share vertex 1, so XX anticommutes with ZZ.
    Circuit c(4, 3);
    c.append(parity_circuit({ParityBasis::ZZ, {0, 1}, 3, 0}, 4, 3));
    c.append(parity_circuit({ParityBasis::XX, {1, 2}, 3, 1}, 4, 3));
    c.append(parity_circuit({ParityBasis::ZZ, {0, 1}, 3, 2}, 4, 3));
    double p_second_one = 0.0, p_first_zero = 0.0;
    for (const auto &[rec, p] : exact_distribution(c)) {
        if (ShotTable::bit(rec, 0) == 0) {
            p_first_zero += p;
            p_second_one += ShotTable::bit(rec, 2) * p;
        }
    }
    EXPECT_NEAR(p_first_zero, 1.0, 1e-12);
    EXPECT_NEAR(p_second_one, 0.5, 1e-12);
}

TEST(ParityCircuit, XXOnTheSamePairCommutesWithZZ) {
    Circuit c(3, 3);
    c.append(parity_circuit({ParityBasis::ZZ, {0, 1}, 2, 0}, 3, 3));
    c.append(parity_circuit({ParityBasis::XX, {0, 1}, 2, 1}, 3, 3));
    c.append(parity_circuit({ParityBasis::ZZ, {0, 1}, 2, 2}, 3, 3));
    for (const auto &[rec, p] : exact_distribution(c)) {
        EXPECT_EQ(ShotTable::bit(rec, 2), 0) << "p=" << p;
    }
}

TEST(ParityOperator, LettersAndWidth) {
    EXPECT_EQ(parity_operator(ParityBasis::YY, 0, 2, 3).str(), "+YIY");
    EXPECT_EQ(parity_operator(ParityBasis::XX, 1, 2, 3).str(), "+IXX");
    EXPECT_EQ(pauli_letter(ParityBasis::ZZ), 'Z');
}

}  // namespace
