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

#include <string_view>
#include <utility>
#include <vector>

#include "majex/circuit.hpp"
#include "majex/pauli.hpp"

namespace majex {

/// Two-qubit parity basis. Edge colors of the matching-code lattice map
/// one-to-one: red = XX, green = YY, blue = ZZ.
enum class ParityBasis { XX, YY, ZZ };

std::string_view name(ParityBasis basis);
char pauli_letter(ParityBasis basis);

/// Gates that rotate one data qubit so that a Z-controlled CNOT reads the
/// basis letter: none for Z, H for X, Sdg then H for Y.
std::vector<GateKind> basis_rotation(char letter);
/// Inverse of basis_rotation(letter), in application order.
std::vector<GateKind> basis_unrotation(char letter);

struct ParityMeasurement {
    ParityBasis basis;
    std::pair<int, int> data;  // (v_i, v_j)
    int ancilla;
    int cbit;
};

/// Ancilla-mediated parity measurement. The ancilla must be |0> on entry;
/// the circuit rotates both data qubits into the basis, copies v_j and then
/// v_i onto the ancilla with CNOTs, rotates back, measures the ancilla into
/// `cbit` and resets it. Outcome 0 means even parity.
///
/// Throws ConstructionError when the three qubits are not distinct.
/// The returned circuit is sized to the largest index used; append it into
/// a wider circuit with Circuit::append.
Circuit parity_circuit(const ParityMeasurement &m, int num_qubits, int num_cbits);

/// The Pauli whose +1 eigenspace corresponds to outcome 0.
PauliOperator parity_operator(ParityBasis basis, int v_i, int v_j, int width);

}  // namespace majex
