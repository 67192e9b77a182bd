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

#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "majex/schedule.hpp"
#include "majex/statevec.hpp"

namespace majex {

struct QubitNoise {
    double t1 = std::numeric_limits<double>::infinity();  // seconds
    double t2 = std::numeric_limits<double>::infinity();  // seconds
    double readout_error = 0.0;
    double single_gate_error = 0.0;

    bool operator==(const QubitNoise &) const = default;
};

/// Monte-Carlo trajectory noise model.
///
/// Per qubit: amplitude damping at rate 1/T1 and pure dephasing at rate
/// 1/T2 - 1/(2 T1), applied over idle gaps and over each operation's own
/// duration; a classical flip of the recorded bit at readout. Per gate: a
/// uniformly random non-identity Pauli on the operands with the gate's
/// depolarizing probability.
struct NoiseConfig {
    std::string id = "custom";
    std::vector<QubitNoise> qubits;
    /// Keyed by (control, target) as executed. Lookups fall back to the
    /// reversed pair and then to default_cx_error.
    std::map<std::pair<int, int>, double> cx_error;
    double default_cx_error = 0.0;
    GateDurations durations;

    /// Throws ValidationError for probabilities outside [0,1], non-positive
    /// lifetimes, or T2 > 2 T1.
    void validate() const;

    /// Noise parameters of qubit q; qubits beyond the table are noiseless.
    QubitNoise qubit(int q) const;
    double cx_error_for(int control, int target) const;

    /// Only depolarizing gate noise, probability p on every gate; no
    /// decoherence, no readout error, zero durations.
    static NoiseConfig depolarizing(int num_qubits, double p);

    bool operator==(const NoiseConfig &) const = default;
};

/// Idle decoherence on one qubit for `duration` seconds (trajectory unraveling).
void apply_idle_noise(StateVector &state, int qubit, double duration, const NoiseConfig &config, Rng &rng);

/// Depolarizing error after an (already applied) ideal gate.
void apply_gate_noise(StateVector &state, const Gate &gate, const NoiseConfig &config, Rng &rng);

/// Recorded bit after a possible readout flip.
int apply_readout_noise(int bit, int qubit, const NoiseConfig &config, Rng &rng);

/// Amplitude-damping probability 1 - exp(-t/T1).
double damping_probability(double duration, double t1);
/// Probability of the dephasing Z kick: (1 - exp(-t/T_phi)) / 2.
double dephasing_flip_probability(double duration, double t1, double t2);

}  // namespace majex
