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

#include <algorithm>
#include <cmath>
#include <map>

#include "majex/circuit_text.hpp"
#include "majex/compile.hpp"
#include "majex/errors.hpp"
#include "majex/schedule.hpp"
#include "oracle.hpp"

using namespace majex;

namespace {

DeviceModel uniform_star(int hub = 2) {
    return DeviceModel::star(5, hub, DeviceQubit{50.0, 60.0, 0.03, 0.001}, 0.03, 300.0, 80.0, 1000.0);
}

constexpr ReadoutSetting kAllSettings[] = {ReadoutSetting::Z, ReadoutSetting::X, ReadoutSetting::Y_YZY,
                                           ReadoutSetting::Y_XZX};

// Decoded outcome -> probability, from the dense oracle.
std::map<std::array<int, 5>, double> decoded(const Circuit &c, const ExperimentDef &def, const oracle::Vec &init) {
    std::map<std::array<int, 5>, double> out;
    for (const auto &[r, p] : oracle::distribution(c, init)) {
        const ExchangeOutcome o = decode(def, r);
        out[{o.yy, o.xx, o.z2, o.v1, o.v3}] += p;
    }
    return out;
}

double tv(const std::map<std::array<int, 5>, double> &a, const std::map<std::array<int, 5>, double> &b) {
    double s = 0.0;
    for (const auto &[k, p] : a) {
        s += std::abs(p - (b.count(k) ? b.at(k) : 0.0));
    }
    for (const auto &[k, p] : b) {
        if (!a.count(k)) {
            s += p;
        }
    }
    return 0.5 * s;
}

// Post-selected (v1, v3) distribution from a decoded joint distribution.
std::array<double, 4> postselected(const std::map<std::array<int, 5>, double> &d) {
    std::array<double, 4> p{};
    double acc = 0.0;
    for (const auto &[k, w] : d) {
        if (k[0] == 0 && k[1] == 0 && k[2] == 0) {
            acc += w;
            p[2 * k[3] + k[4]] += w;
        }
    }
    for (double &x : p) {
        x /= acc;
    }
    return p;
}

oracle::Vec embed_vertices(const StateVector &local, const std::array<int, 3> &where) {
    return oracle::to_vec(embed(local, 5, std::vector<int>(where.begin(), where.end())));
}

TEST(ReverseCnot, UnitaryEqualsForwardCnot) {
    const DeviceModel d = uniform_star();
    for (int leaf : {0, 1, 3, 4}) {
        const auto seq = reverse_cnot(d, 2, leaf);
        EXPECT_TRUE(oracle::unitary(seq, 5).isApprox(oracle::cnot(2, leaf, 5), 1e-12));
        for (const Gate &g : seq) {
            if (g.kind == GateKind::CX) {
                EXPECT_TRUE(d.allows(g.operands[0], g.operands[1]));
            }
        }
    }
}

TEST(ReverseCnot, TruthTableOnTwoQubits) {
    DeviceModel d = DeviceModel::star(2, 1, DeviceQubit{50, 60, 0, 0}, 0.0, 1, 1, 1);
    // CNOT(1 -> 0) is realised through the allowed CNOT(0 -> 1).
    StateVector s = StateVector::from_amplitudes({0, 0, 1, 0});  // qubit 1 set
    for (const Gate &g : reverse_cnot(d, 1, 0)) {
        s.apply(g);
    }
    EXPECT_NEAR(std::abs(s.amplitudes()[3]), 1.0, 1e-12);
}

TEST(ReverseCnot, DisallowedPairsAreRoutingErrors) {
    const DeviceModel d = uniform_star();
    EXPECT_THROW(reverse_cnot(d, 0, 1), RoutingError);
    EXPECT_THROW(legalize_cnot(d, 0, 1), RoutingError);
    // The allowed direction has nothing to reverse from.
    EXPECT_THROW(reverse_cnot(d, 0, 2), RoutingError);
    EXPECT_EQ(legalize_cnot(d, 0, 2).size(), 1u);
    EXPECT_EQ(legalize_cnot(d, 2, 0).size(), 5u);
}

TEST(Compile, EveryCnotTargetsTheHubAndIsAllowed) {
    for (int hub = 0; hub < 5; ++hub) {
        const DeviceModel d = uniform_star(hub);
        const QubitAssignment a = assign_qubits(d);
        EXPECT_EQ(a.of(Role::E12), hub);
        for (ReadoutSetting s : kAllSettings) {
            const Circuit c = compile(ideal_circuit(ExperimentDef{}, s), d, a);
            ASSERT_FALSE(c.cnots().empty());
            for (const Gate &g : c.cnots()) {
                EXPECT_EQ(g.target(), hub);
                EXPECT_TRUE(d.allows(g.control(), g.target()));
            }
        }
    }
}

TEST(Compile, SharedAncillaIsNeverReset) {
    const DeviceModel d = uniform_star();
    const QubitAssignment a = assign_qubits(d);
    const Circuit c = compile(ideal_circuit(ExperimentDef{}), d, a);
    for (const auto &inst : c.instructions()) {
        EXPECT_FALSE(std::holds_alternative<Reset>(inst));
    }
    EXPECT_EQ(c.count_measurements(), 5u);
}

TEST(Compile, InstructionsFollowAsapStartTimes) {
    const DeviceModel d = uniform_star();
    const Circuit c = compile(ideal_circuit(ExperimentDef{}), d, assign_qubits(d));
    const Schedule s = asap_schedule(c, d.durations());
    for (std::size_t k = 1; k < s.start.size(); ++k) {
        EXPECT_LE(s.start[k - 1], s.start[k]);
    }
}

TEST(Compile, RejectsOtherCircuits) {
    const DeviceModel d = uniform_star();
    Circuit other(5, 5);
    other.gate(GateKind::H, 0).measure(0, 0);
    EXPECT_THROW(compile(other, d, QubitAssignment{}), ConstructionError);
}

TEST(Compile, IncompatibleAssignmentIsRoutingError) {
    const DeviceModel d = uniform_star(2);
    QubitAssignment a;
    a.physical = {2, 0, 1, 3, 4};  // hub as v1, leaf 4 as the shared ancilla
    EXPECT_THROW(compile(ideal_circuit(ExperimentDef{}), d, a), RoutingError);
    a.physical = {0, 0, 1, 3, 4};
    EXPECT_THROW(compile(ideal_circuit(ExperimentDef{}), d, a), RoutingError);
}

TEST(Compile, SemanticPreservationOnTwentyRandomStates) {
    const DeviceModel d = uniform_star();
    const QubitAssignment a = assign_qubits(d);
    const ExperimentDef ideal_def;
    const ExperimentDef dev_def = a.experiment();
    Rng rng(616);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector data = random_state(3, rng);
        for (ReadoutSetting s : kAllSettings) {
            const auto want = decoded(ideal_circuit(ideal_def, s), ideal_def,
                                      embed_vertices(data, {ideal_def.v1, ideal_def.v2, ideal_def.v3}));
            const auto got = decoded(compile(ideal_circuit(ideal_def, s), d, a), dev_def,
                                     embed_vertices(data, {dev_def.v1, dev_def.v2, dev_def.v3}));
            // Full decoded joint distribution, so the YY / XX inference holds
            // outcome by outcome, not only after post-selection.
            EXPECT_LT(tv(want, got), 1e-9) << name(s);
            const auto pw = postselected(want), pg = postselected(got);
            double d_tv = 0.0;
            for (int k = 0; k < 4; ++k) {
                d_tv += 0.5 * std::abs(pw[k] - pg[k]);
            }
            EXPECT_LT(d_tv, 1e-9);
        }
    }
}

TEST(Compile, DecodedBitsMatchIdealShotByShot) {
    // Sampled compiled shots: every decoded tuple must be one the ideal
    // circuit can produce, and the raw ancilla bits obey e12 = XX xor YY.
    const DeviceModel d = uniform_star();
    const QubitAssignment a = assign_qubits(d);
    const ExperimentDef dev_def = a.experiment();
    const auto ideal = decoded(ideal_circuit(ExperimentDef{}), ExperimentDef{}, oracle::zero_state(5));
    const Circuit c = compile(ideal_circuit(ExperimentDef{}), d, a);
    const ShotTable t = run_shots(c, 4000, std::nullopt, 5);
    std::map<std::array<int, 5>, int> seen;
    for (std::uint64_t r : t.records) {
        const ExchangeOutcome o = decode(dev_def, r);
        EXPECT_EQ(ShotTable::bit(r, 1), o.yy);
        EXPECT_EQ(ShotTable::bit(r, 0), o.xx ^ o.yy);
        const std::array<int, 5> k{o.yy, o.xx, o.z2, o.v1, o.v3};
        ASSERT_TRUE(ideal.count(k) && ideal.at(k) > 1e-12);
        ++seen[k];
    }
    // Frequencies agree with the oracle within 4 sigma.
    for (const auto &[k, p] : ideal) {
        const double f = seen[k] / 4000.0;
        EXPECT_LT(std::abs(f - p), 4 * std::sqrt(p * (1 - p) / 4000.0) + 1e-12);
    }
}

TEST(AssignQubits, UniformCalibrationTiesAndDeterminism) {
    const DeviceModel d = uniform_star();
    const QubitAssignment first = assign_qubits(d);
    EXPECT_EQ(first.physical, (std::array<int, 5>{0, 1, 3, 4, 2}));
    EXPECT_EQ(assign_qubits(d).physical, first.physical);
    std::array<int, 5> p{0, 1, 2, 3, 4};
    int valid = 0;
    do {
        QubitAssignment a;
        a.physical = p;
        if (a.of(Role::E12) != 2) {
            EXPECT_THROW(assignment_cost(d, a), RoutingError);
            continue;
        }
        ++valid;
        EXPECT_NEAR(assignment_cost(d, a), first.score, 1e-12 * first.score);
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(valid, 24);
}

TEST(AssignQubits, BruteForceArgminMatches) {
    DeviceModel d = uniform_star();
    Rng rng(8);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    for (int trial = 0; trial < 10; ++trial) {
        for (auto &q : d.qubits) {
            q.t1_us = 50 * u(rng);
            q.t2_us = std::min(2 * q.t1_us, 60 * u(rng));
            q.readout_err = 0.03 * u(rng);
        }
        for (auto &[pair, e] : d.cnot_err) {
            e = 0.03 * u(rng);
        }
        const QubitAssignment got = assign_qubits(d);
        std::array<int, 5> p{0, 1, 2, 3, 4};
        double best = 1e300;
        do {
            QubitAssignment a;
            a.physical = p;
            try {
                best = std::min(best, assignment_cost(d, a));
            } catch (const RoutingError &) {
            }
        } while (std::next_permutation(p.begin(), p.end()));
        EXPECT_DOUBLE_EQ(got.score, best);
    }
}

TEST(AssignQubits, DegradedQubitAvoidsTheLongestIdlingRole) {
    const DeviceModel base = uniform_star();
    const QubitAssignment a0 = assign_qubits(base);
    const Circuit c = compile(ideal_circuit(ExperimentDef{}), base, a0);
    std::map<int, double> idle;  // physical qubit -> total idle seconds
    for (const auto &iv : asap_schedule(c, base.durations()).idles(c)) {
        idle[iv.qubit] += iv.duration();
    }
    Role longest = Role::V1;
    double most = -1.0;
    for (Role r : kRoles) {
        if (idle[a0.of(r)] > most) {
            most = idle[a0.of(r)];
            longest = r;
        }
    }
    ASSERT_GT(most, 0.0);
    for (int q : {0, 1, 3, 4}) {
        DeviceModel d = base;
        d.qubits[q].t1_us /= 10.0;
        d.qubits[q].t2_us = std::min(d.qubits[q].t2_us, 2 * d.qubits[q].t1_us);
        EXPECT_NE(assign_qubits(d).of(longest), q) << "degraded qubit " << q;
    }
}

TEST(AssignQubits, ArgminInvariantUnderRateScaling) {
    DeviceModel d = uniform_star();
    d.qubits[0].t1_us = 20;
    d.qubits[0].t2_us = 25;
    d.qubits[3].readout_err = 0.08;
    d.cnot_err[{1, 2}] = 0.05;
    const auto base = assign_qubits(d).physical;
    for (double k : {0.1, 0.5, 2.0, 3.0}) {
        DeviceModel s = d;
        for (auto &q : s.qubits) {
            q.t1_us /= k;
            q.t2_us /= k;
            q.readout_err *= k;
            q.single_err *= k;
        }
        for (auto &[p, e] : s.cnot_err) {
            e *= k;
        }
        EXPECT_EQ(assign_qubits(s).physical, base) << "scale " << k;
    }
}

TEST(AssignQubits, LineDeviceHasNoAssignment) {
    DeviceModel d = uniform_star();
    d.allowed_cnots = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    d.cnot_err = {{{0, 1}, 0.03}, {{1, 2}, 0.03}, {{2, 3}, 0.03}, {{3, 4}, 0.03}};
    EXPECT_THROW(assign_qubits(d), RoutingError);
}

TEST(Device, JsonRoundTrip) {
    DeviceModel d = uniform_star();
    d.name = "round-trip";
    d.qubits[1].t1_us = 41.5;
    const DeviceModel back = parse_device(device_to_json(d));
    EXPECT_EQ(back, d);
    EXPECT_EQ(back.hub(), 2);
}

TEST(Device, ValidationErrors) {
    const std::string good = device_to_json(uniform_star());
    auto with = [&](const std::string &from, const std::string &to) {
        std::string s = good;
        const auto pos = s.find(from);
        EXPECT_NE(pos, std::string::npos) << from;
        s.replace(pos, from.size(), to);
        return s;
    };
    EXPECT_THROW(parse_device(with("\"t2_us\": 60.0", "\"t2_us\": 101.0")), ValidationError);
    EXPECT_THROW(parse_device(with("\"readout_err\": 0.03", "\"readout_err\": 1.5")), ValidationError);
    EXPECT_THROW(parse_device(with("\"t1_us\": 50.0", "\"t1_us\": -1.0")), ValidationError);
    EXPECT_THROW(parse_device(with("\"err\": 0.03", "\"err\": -0.1")), ValidationError);
    EXPECT_THROW(parse_device(with("\"allowed_cnots\"", "\"allowed\"")), ValidationError);
    EXPECT_THROW(parse_device("{\"qubits\": [}"), ParseError);
    try {
        parse_device("{\n  \"qubits\": ]\n}");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2);
    }
}

TEST(Device, AllowedCnotNeedsCalibration) {
    DeviceModel d = uniform_star();
    d.allowed_cnots.insert({0, 1});
    EXPECT_THROW(d.validate(), ValidationError);
}

TEST(Device, NoiseFromDeviceConvertsUnits) {
    const DeviceModel d = uniform_star();
    const NoiseConfig n = noise_from_device(d);
    EXPECT_DOUBLE_EQ(n.qubits[0].t1, 50e-6);
    EXPECT_DOUBLE_EQ(n.durations.cx, 300e-9);
    EXPECT_DOUBLE_EQ(n.cx_error_for(0, 2), 0.03);
    EXPECT_DOUBLE_EQ(n.cx_error_for(2, 0), 0.03);
}

TEST(Device, ShippedSyntheticFileLoads) {
    const DeviceModel d = load_device(MAJEX_DATA_DIR "/device_synthetic.json");
    EXPECT_TRUE(d.synthetic);
    EXPECT_EQ(d.num_qubits(), 5);
    EXPECT_EQ(d.hub(), 2);
    const QubitAssignment a = assign_qubits(d);
    EXPECT_EQ(a.of(Role::E12), 2);
}

}  // namespace
