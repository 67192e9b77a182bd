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

#include "majex/compile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "majex/errors.hpp"
#include "majex/parity.hpp"
#include "majex/schedule.hpp"

namespace majex {
namespace {

constexpr ReadoutSetting kSettings[] = {ReadoutSetting::Z, ReadoutSetting::X, ReadoutSetting::Y_YZY,
                                        ReadoutSetting::Y_XZX};

std::optional<ReadoutSetting> match_template(const Circuit &circuit) {
    if (circuit.num_qubits() != kExchangeQubits || circuit.num_cbits() != kExchangeCbits) {
        return std::nullopt;
    }
    for (ReadoutSetting s : kSettings) {
        if (circuit == ideal_circuit(ExperimentDef{}, s)) {
            return s;
        }
    }
    return std::nullopt;
}

// Readout rotations on (v1, v3) for a setting, read back from the ideal
// circuit so the two stay in sync.
std::pair<std::vector<GateKind>, std::vector<GateKind>> readout_rotations(ReadoutSetting setting) {
    const ExperimentDef def;
    const Circuit ideal = ideal_circuit(def, setting);
    std::vector<GateKind> r1, r3;
    bool after_z2 = false;
    for (const auto &inst : ideal.instructions()) {
        if (const auto *m = std::get_if<Measure>(&inst); m && m->qubit == def.v2) {
            after_z2 = true;
        } else if (const auto *g = std::get_if<Gate>(&inst); g && after_z2) {
            (g->operands[0] == def.v1 ? r1 : r3).push_back(g->kind);
        }
    }
    return {r1, r3};
}

void append_cnot(Circuit &out, const DeviceModel &device, int control, int target) {
    for (const Gate &g : legalize_cnot(device, control, target)) {
        out.append(g);
    }
}

// Parity measurement onto an ancilla that is neither measured nor reset.
void append_parity_interaction(Circuit &out, const DeviceModel &device, ParityBasis basis, int vi, int vj,
                               int ancilla) {
    const char letter = pauli_letter(basis);
    for (int q : {vi, vj}) {
        for (GateKind g : basis_rotation(letter)) {
            out.gate(g, q);
        }
    }
    append_cnot(out, device, vj, ancilla);
    append_cnot(out, device, vi, ancilla);
    for (int q : {vi, vj}) {
        for (GateKind g : basis_unrotation(letter)) {
            out.gate(g, q);
        }
    }
}

void require_five(const DeviceModel &device) {
    if (device.num_qubits() != kExchangeQubits) {
        throw RoutingError("the exchange needs a five-qubit device, got " + std::to_string(device.num_qubits()));
    }
}

}  // namespace

std::string_view name(Role role) {
    switch (role) {
        case Role::V1:
            return "v1";
        case Role::V2:
            return "v2";
        case Role::V3:
            return "v3";
        case Role::E1:
            return "e1";
        case Role::E12:
            return "e12";
    }
    return "?";
}

ExperimentDef QubitAssignment::experiment() const {
    ExperimentDef def;
    def.v1 = of(Role::V1);
    def.v2 = of(Role::V2);
    def.v3 = of(Role::V3);
    def.e1 = of(Role::E1);
    def.e2 = of(Role::E12);
    def.layout = AncillaLayout::SharedAncilla;
    return def;
}

void QubitAssignment::validate(const DeviceModel &device) const {
    require_five(device);
    std::array<int, 5> sorted = physical;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < 5; ++k) {
        if (sorted[k] != k) {
            throw RoutingError("assignment is not a permutation of the device qubits");
        }
    }
}

std::vector<Gate> reverse_cnot(const DeviceModel &device, int control, int target) {
    if (!device.allows(target, control)) {
        throw RoutingError("cannot reverse CNOT(" + std::to_string(control) + " -> " + std::to_string(target) +
                           "): the opposite orientation is not allowed");
    }
    return {Gate::single(GateKind::H, control), Gate::single(GateKind::H, target), Gate::cx(target, control),
            Gate::single(GateKind::H, control), Gate::single(GateKind::H, target)};
}

std::vector<Gate> legalize_cnot(const DeviceModel &device, int control, int target) {
    if (device.allows(control, target)) {
        return {Gate::cx(control, target)};
    }
    if (device.allows(target, control)) {
        return reverse_cnot(device, control, target);
    }
    throw RoutingError("qubits " + std::to_string(control) + " and " + std::to_string(target) +
                       " are not connected");
}

Circuit compile(const Circuit &circuit, const DeviceModel &device, const QubitAssignment &assignment) {
    const auto setting = match_template(circuit);
    if (!setting) {
        throw ConstructionError("compile accepts only the ideal exchange circuit");
    }
    assignment.validate(device);
    const int v1 = assignment.of(Role::V1);
    const int v2 = assignment.of(Role::V2);
    const int v3 = assignment.of(Role::V3);
    const int e1 = assignment.of(Role::E1);
    const int e12 = assignment.of(Role::E12);

    Circuit out(device.num_qubits(), kExchangeCbits);
    append_parity_interaction(out, device, ParityBasis::YY, v1, v2, e12);
    append_cnot(out, device, e12, e1);
    append_parity_interaction(out, device, ParityBasis::XX, v2, v3, e12);
    out.measure(e12, 0);
    out.measure(e1, 1);
    out.measure(v2, 2);
    const auto [r1, r3] = readout_rotations(*setting);
    for (GateKind g : r1) {
        out.gate(g, v1);
    }
    for (GateKind g : r3) {
        out.gate(g, v3);
    }
    out.measure(v1, 3);
    out.measure(v3, 4);
    return reorder_by_start(out, asap_schedule(out, device.durations()));
}

double assignment_cost(const DeviceModel &device, const QubitAssignment &assignment) {
    const Circuit c = compile(ideal_circuit(ExperimentDef{}), device, assignment);
    const Schedule s = asap_schedule(c, device.durations());
    double cost = 0.0;
    for (const auto &inst : c.instructions()) {
        if (const auto *g = std::get_if<Gate>(&inst)) {
            cost += g->kind == GateKind::CX ? device.cnot_error(g->operands[0], g->operands[1])
                                            : device.qubits[g->operands[0]].single_err;
        } else if (const auto *m = std::get_if<Measure>(&inst)) {
            cost += device.qubits[m->qubit].readout_err;
        }
    }
    for (const auto &idle : s.idles(c)) {
        const DeviceQubit &q = device.qubits[idle.qubit];
        const double d_us = idle.duration() * 1e6;
        cost += d_us / q.t1_us + d_us / q.t2_us;
    }
    return cost;
}

QubitAssignment assign_qubits(const DeviceModel &device) {
    device.validate();
    require_five(device);
    QubitAssignment trial;
    std::optional<QubitAssignment> best;
    do {
        double cost = 0.0;
        try {
            cost = assignment_cost(device, trial);
        } catch (const RoutingError &) {
            continue;
        }
        if (!best || cost < best->score - 1e-12 * std::abs(best->score)) {
            best = trial;
            best->score = cost;
        }
    } while (std::next_permutation(trial.physical.begin(), trial.physical.end()));
    if (!best) {
        throw RoutingError("no role assignment is compatible with the device connectivity");
    }
    return *best;
}

}  // namespace majex
