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

#include <array>
#include <string>
#include <vector>

#include "majex/circuit.hpp"
#include "majex/device.hpp"
#include "majex/exchange.hpp"

namespace majex {

enum class Role { V1, V2, V3, E1, E12 };
inline constexpr std::array<Role, 5> kRoles = {Role::V1, Role::V2, Role::V3, Role::E1, Role::E12};
std::string_view name(Role role);

/// physical[k] is the device qubit playing role kRoles[k].
struct QubitAssignment {
    std::array<int, 5> physical{0, 1, 2, 3, 4};
    double score = 0.0;

    int of(Role role) const {
        return physical[static_cast<int>(role)];
    }
    /// Definition for decoding shots of the compiled circuit.
    ExperimentDef experiment() const;
    /// Throws RoutingError unless physical is a permutation of the
    /// device's qubits.
    void validate(const DeviceModel &device) const;
};

/// H on both, CNOT(target -> control), H on both: equal to CNOT(control ->
/// target). Throws RoutingError unless (target, control) is allowed.
std::vector<Gate> reverse_cnot(const DeviceModel &device, int control, int target);

/// CNOT(control -> target) as-is when allowed, else via reverse_cnot.
/// Throws RoutingError when the pair is not connected.
std::vector<Gate> legalize_cnot(const DeviceModel &device, int control, int target);

/// Maps the ideal exchange circuit (any readout setting, canonical roles
/// v1..e2 = 0..4) onto the device with one shared ancilla e_{1/2}:
/// YY(v1, v2) onto e_{1/2}, CNOT e_{1/2} -> e1 copies the YY value out,
/// XX(v2, v3) onto the same unreset e_{1/2}, then e_{1/2} is read into
/// cbit 0 (XX xor YY) and e1 into cbit 1 (YY). Every CNOT is legalized and
/// instructions are ordered by their ASAP start times.
///
/// Throws ConstructionError when `circuit` is not an ideal exchange
/// circuit and RoutingError when the assignment needs an unconnected pair.
Circuit compile(const Circuit &circuit, const DeviceModel &device, const QubitAssignment &assignment);

/// Additive noise figure of the compiled circuit under `assignment`:
/// every gate's error (CNOT pair error, single-qubit error), plus
/// d/T1 + d/T2 for every idle gap d of the ASAP schedule, plus the readout
/// error of every measured qubit. Throws RoutingError as compile() does.
double assignment_cost(const DeviceModel &device, const QubitAssignment &assignment);

/// Enumerates all 5! role maps in lexicographic order of `physical` and
/// returns the first with minimal cost (relative tolerance 1e-12).
/// Throws RoutingError when no map is routable.
QubitAssignment assign_qubits(const DeviceModel &device);

}  // namespace majex
