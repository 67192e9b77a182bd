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

#include "majex/noise.hpp"

#include <cmath>
#include <string>

#include "majex/errors.hpp"

namespace majex {
namespace {

bool is_probability(double p) {
    return p >= 0.0 && p <= 1.0;
}

double uniform01(Rng &rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

constexpr GateKind kPaulis[3] = {GateKind::X, GateKind::Y, GateKind::Z};

}  // namespace

void NoiseConfig::validate() const {
    for (std::size_t q = 0; q < qubits.size(); ++q) {
        const auto &n = qubits[q];
        const std::string where = "qubit " + std::to_string(q) + ": ";
        if (!(n.t1 > 0.0) || !(n.t2 > 0.0)) {
            throw ValidationError(where + "T1 and T2 must be positive");
        }
        if (n.t2 > 2.0 * n.t1 * (1.0 + 1e-12)) {
            throw ValidationError(where + "T2 exceeds 2*T1");
        }
        if (!is_probability(n.readout_error) || !is_probability(n.single_gate_error)) {
            throw ValidationError(where + "error probabilities must lie in [0, 1]");
        }
    }
    for (const auto &[pair, p] : cx_error) {
        if (!is_probability(p)) {
            throw ValidationError("cx error for (" + std::to_string(pair.first) + ", " + std::to_string(pair.second) +
                                  ") outside [0, 1]");
        }
    }
    if (!is_probability(default_cx_error)) {
        throw ValidationError("default cx error outside [0, 1]");
    }
    for (double d : {durations.single, durations.cx, durations.measure, durations.reset}) {
        if (!(d >= 0.0) || !std::isfinite(d)) {
            throw ValidationError("durations must be finite and non-negative");
        }
    }
}

QubitNoise NoiseConfig::qubit(int q) const {
    if (q >= 0 && static_cast<std::size_t>(q) < qubits.size()) {
        return qubits[q];
    }
    return {};
}

double NoiseConfig::cx_error_for(int control, int target) const {
    if (auto it = cx_error.find({control, target}); it != cx_error.end()) {
        return it->second;
    }
    if (auto it = cx_error.find({target, control}); it != cx_error.end()) {
        return it->second;
    }
    return default_cx_error;
}

NoiseConfig NoiseConfig::depolarizing(int num_qubits, double p) {
    NoiseConfig c;
    c.id = "depolarizing(" + std::to_string(p) + ")";
    c.qubits.assign(num_qubits, QubitNoise{});
    for (auto &q : c.qubits) {
        q.single_gate_error = p;
    }
    c.default_cx_error = p;
    c.validate();
    return c;
}

double damping_probability(double duration, double t1) {
    if (!(duration > 0.0) || std::isinf(t1)) {
        return 0.0;
    }
    return -std::expm1(-duration / t1);
}

double dephasing_flip_probability(double duration, double t1, double t2) {
    if (!(duration > 0.0) || std::isinf(t2)) {
        return 0.0;
    }
    const double rate = 1.0 / t2 - (std::isinf(t1) ? 0.0 : 0.5 / t1);
    if (rate <= 0.0) {
        return 0.0;
    }
    return -0.5 * std::expm1(-duration * rate);
}

void apply_idle_noise(StateVector &state, int qubit, double duration, const NoiseConfig &config, Rng &rng) {
    if (duration < 0.0) {
        throw std::invalid_argument("idle duration must be non-negative");
    }
    if (duration == 0.0) {
        return;
    }
    const QubitNoise n = config.qubit(qubit);
    const double gamma = damping_probability(duration, n.t1);
    if (gamma > 0.0) {
        // Jump K1 = sqrt(gamma)|0><1| with probability gamma * P(1); otherwise
        // K0 = diag(1, sqrt(1 - gamma)) and renormalize.
        const double p1 = state.probability_one(qubit);
        if (p1 > kImpossibleCutoff && uniform01(rng) < gamma * p1) {
            state.collapse(qubit, 1);
            state.apply(Gate::single(GateKind::X, qubit));
        } else {
            state.apply_matrix(qubit, Mat2{1.0, 0.0, 0.0, std::sqrt(1.0 - gamma)});
            state.renormalize();
        }
    }
    const double p_z = dephasing_flip_probability(duration, n.t1, n.t2);
    if (p_z > 0.0 && uniform01(rng) < p_z) {
        state.apply(Gate::single(GateKind::Z, qubit));
    }
}

void apply_gate_noise(StateVector &state, const Gate &gate, const NoiseConfig &config, Rng &rng) {
    if (gate.kind == GateKind::CX) {
        const double p = config.cx_error_for(gate.operands[0], gate.operands[1]);
        if (p > 0.0 && uniform01(rng) < p) {
            // One of the 15 non-identity two-qubit Paulis.
            const int k = std::uniform_int_distribution<int>(1, 15)(rng);
            const int a = k & 3, b = k >> 2;
            if (a) {
                state.apply(Gate::single(kPaulis[a - 1], gate.operands[0]));
            }
            if (b) {
                state.apply(Gate::single(kPaulis[b - 1], gate.operands[1]));
            }
        }
        return;
    }
    const int q = gate.operands[0];
    const double p = config.qubit(q).single_gate_error;
    if (p > 0.0 && uniform01(rng) < p) {
        state.apply(Gate::single(kPaulis[std::uniform_int_distribution<int>(0, 2)(rng)], q));
    }
}

int apply_readout_noise(int bit, int qubit, const NoiseConfig &config, Rng &rng) {
    const double p = config.qubit(qubit).readout_error;
    if (p > 0.0 && uniform01(rng) < p) {
        return bit ^ 1;
    }
    return bit;
}

}  // namespace majex
