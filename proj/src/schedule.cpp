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

#include "majex/schedule.hpp"

#include <algorithm>
#include <numeric>

namespace majex {

double GateDurations::of(const Instruction &inst) const {
    if (const auto *g = std::get_if<Gate>(&inst)) {
        return g->kind == GateKind::CX ? cx : single;
    }
    if (std::holds_alternative<Measure>(inst)) {
        return measure;
    }
    if (std::holds_alternative<Reset>(inst)) {
        return reset;
    }
    return 0.0;
}

Schedule asap_schedule(const Circuit &circuit, const GateDurations &durations) {
    Schedule s;
    const auto &ops = circuit.instructions();
    s.start.resize(ops.size());
    s.end.resize(ops.size());
    std::vector<double> free_at(circuit.num_qubits(), 0.0);
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const auto qs = touched_qubits(ops[k], circuit.num_qubits());
        double t = 0.0;
        for (int q : qs) {
            t = std::max(t, free_at[q]);
        }
        s.start[k] = t;
        s.end[k] = t + durations.of(ops[k]);
        for (int q : qs) {
            free_at[q] = s.end[k];
        }
        s.makespan = std::max(s.makespan, s.end[k]);
    }
    return s;
}

std::vector<IdleInterval> Schedule::idles(const Circuit &circuit) const {
    std::vector<IdleInterval> out;
    std::vector<double> last_end(circuit.num_qubits(), -1.0);
    const auto &ops = circuit.instructions();
    for (std::size_t k = 0; k < ops.size(); ++k) {
        if (std::holds_alternative<Barrier>(ops[k])) {
            continue;
        }
        for (int q : touched_qubits(ops[k], circuit.num_qubits())) {
            if (last_end[q] >= 0.0 && start[k] > last_end[q]) {
                out.push_back({q, last_end[q], start[k]});
            }
            last_end[q] = end[k];
        }
    }
    return out;
}

Circuit reorder_by_start(const Circuit &circuit, const Schedule &schedule) {
    std::vector<std::size_t> order(circuit.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return schedule.start[a] < schedule.start[b]; });
    Circuit out(circuit.num_qubits(), circuit.num_cbits());
    for (std::size_t k : order) {
        out.append(circuit.instructions()[k]);
    }
    return out;
}

}  // namespace majex
