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

#include "majex/circuit.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "majex/errors.hpp"

namespace majex {

std::string_view mnemonic(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "x";
        case GateKind::Y:
            return "y";
        case GateKind::Z:
            return "z";
        case GateKind::H:
            return "h";
        case GateKind::S:
            return "s";
        case GateKind::Sdg:
            return "sdg";
        case GateKind::CX:
            return "cx";
    }
    return "?";
}

int arity(GateKind kind) {
    return kind == GateKind::CX ? 2 : 1;
}

Mat2 gate_matrix(GateKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i{0.0, 1.0};
    switch (kind) {
        case GateKind::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -i, i, 0.0};
        case GateKind::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::S:
            return {1.0, 0.0, 0.0, i};
        case GateKind::Sdg:
            return {1.0, 0.0, 0.0, -i};
        case GateKind::CX:
            break;
    }
    throw std::invalid_argument("cx has no single-qubit matrix");
}

std::vector<int> touched_qubits(const Instruction &inst, int num_qubits) {
    if (const auto *g = std::get_if<Gate>(&inst)) {
        if (g->kind == GateKind::CX) {
            return {g->operands[0], g->operands[1]};
        }
        return {g->operands[0]};
    }
    if (const auto *m = std::get_if<Measure>(&inst)) {
        return {m->qubit};
    }
    if (const auto *r = std::get_if<Reset>(&inst)) {
        return {r->qubit};
    }
    std::vector<int> all(num_qubits);
    std::iota(all.begin(), all.end(), 0);
    return all;
}

Circuit::Circuit(int num_qubits, int num_cbits) : num_qubits_(num_qubits), num_cbits_(num_cbits) {
    if (num_qubits < 0 || num_cbits < 0) {
        throw ConstructionError("register sizes must be non-negative");
    }
}

Circuit &Circuit::append(Instruction inst) {
    auto check_qubit = [&](int q) {
        if (q < 0 || q >= num_qubits_) {
            throw BoundsError("qubit index " + std::to_string(q) + " out of range (" + std::to_string(num_qubits_) +
                              " qubits)");
        }
    };
    if (const auto *g = std::get_if<Gate>(&inst)) {
        check_qubit(g->operands[0]);
        if (g->kind == GateKind::CX) {
            check_qubit(g->operands[1]);
            if (g->operands[0] == g->operands[1]) {
                throw ConstructionError("cx control and target must differ");
            }
        }
    } else if (const auto *m = std::get_if<Measure>(&inst)) {
        check_qubit(m->qubit);
        if (m->cbit < 0 || m->cbit >= num_cbits_) {
            throw BoundsError("classical bit " + std::to_string(m->cbit) + " out of range (" +
                              std::to_string(num_cbits_) + " cbits)");
        }
    } else if (const auto *r = std::get_if<Reset>(&inst)) {
        check_qubit(r->qubit);
    }
    ops_.push_back(inst);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    for (const auto &inst : other.ops_) {
        append(inst);
    }
    return *this;
}

std::size_t Circuit::count_measurements() const {
    std::size_t n = 0;
    for (const auto &inst : ops_) {
        n += std::holds_alternative<Measure>(inst);
    }
    return n;
}

std::vector<Gate> Circuit::cnots() const {
    std::vector<Gate> out;
    for (const auto &inst : ops_) {
        if (const auto *g = std::get_if<Gate>(&inst); g && g->kind == GateKind::CX) {
            out.push_back(*g);
        }
    }
    return out;
}

}  // namespace majex
