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

#include "majex/parity.hpp"

#include <string>

#include "majex/errors.hpp"

namespace majex {

std::string_view name(ParityBasis basis) {
    switch (basis) {
        case ParityBasis::XX:
            return "XX";
        case ParityBasis::YY:
            return "YY";
        case ParityBasis::ZZ:
            return "ZZ";
    }
    return "??";
}

char pauli_letter(ParityBasis basis) {
    return name(basis)[0];
}

std::vector<GateKind> basis_rotation(char letter) {
    switch (letter) {
        case 'Z':
            return {};
        case 'X':
            return {GateKind::H};
        case 'Y':
            // H Sdg Y S H = Z
            return {GateKind::Sdg, GateKind::H};
        default:
            throw std::invalid_argument(std::string("no basis rotation for '") + letter + "'");
    }
}

std::vector<GateKind> basis_unrotation(char letter) {
    switch (letter) {
        case 'Z':
            return {};
        case 'X':
            return {GateKind::H};
        case 'Y':
            return {GateKind::H, GateKind::S};
        default:
            throw std::invalid_argument(std::string("no basis rotation for '") + letter + "'");
    }
}

Circuit parity_circuit(const ParityMeasurement &m, int num_qubits, int num_cbits) {
    const auto [vi, vj] = m.data;
    if (vi == vj || vi == m.ancilla || vj == m.ancilla) {
        throw ConstructionError("parity measurement needs three distinct qubits, got (" + std::to_string(vi) + ", " +
                                std::to_string(vj) + ", ancilla " + std::to_string(m.ancilla) + ")");
    }
    const char letter = pauli_letter(m.basis);
    Circuit c(num_qubits, num_cbits);
    for (int q : {vi, vj}) {
        for (GateKind g : basis_rotation(letter)) {
            c.gate(g, q);
        }
    }
    c.cx(vj, m.ancilla);
    c.cx(vi, m.ancilla);
    for (int q : {vi, vj}) {
        for (GateKind g : basis_unrotation(letter)) {
            c.gate(g, q);
        }
    }
    c.measure(m.ancilla, m.cbit);
    c.reset(m.ancilla);
    return c;
}

PauliOperator parity_operator(ParityBasis basis, int v_i, int v_j, int width) {
    PauliOperator op(width);
    op.set(v_i, pauli_letter(basis));
    op.set(v_j, pauli_letter(basis));
    return op;
}

}  // namespace majex
