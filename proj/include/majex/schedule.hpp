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

#include <vector>

#include "majex/circuit.hpp"

namespace majex {

/// Seconds.
struct GateDurations {
    double single = 0.0;
    double cx = 0.0;
    double measure = 0.0;
    double reset = 0.0;

    double of(const Instruction &inst) const;
    bool operator==(const GateDurations &) const = default;
};

/// Idle gap on one qubit between two consecutive operations on it.
struct IdleInterval {
    int qubit;
    double begin;
    double end;
    double duration() const {
        return end - begin;
    }
};

struct Schedule {
    std::vector<double> start;  // per instruction
    std::vector<double> end;
    double makespan = 0.0;

    /// Gaps between consecutive operations on the same qubit. Time before a
    /// qubit's first operation is not idle (the qubit is still |0>).
    std::vector<IdleInterval> idles(const Circuit &circuit) const;
};

/// As-soon-as-possible timing: each instruction starts once the previous
/// instruction on every qubit it touches has finished. Barriers wait for
/// all qubits.
Schedule asap_schedule(const Circuit &circuit, const GateDurations &durations);

/// Same instructions, stably sorted by ASAP start time.
Circuit reorder_by_start(const Circuit &circuit, const Schedule &schedule);

}  // namespace majex
