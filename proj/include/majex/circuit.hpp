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
#include <string_view>
#include <variant>
#include <vector>

#include "majex/kernels.hpp"

namespace majex {

enum class GateKind { X, Y, Z, H, S, Sdg, CX };

std::string_view mnemonic(GateKind kind);
int arity(GateKind kind);

/// Matrix of a single-qubit kind. CX has no 2x2 matrix.
Mat2 gate_matrix(GateKind kind);

/// operands[0] is the only operand for single-qubit kinds; for CX it is the
/// control and operands[1] the target.
struct Gate {
    GateKind kind;
    std::array<int, 2> operands{-1, -1};

    static Gate single(GateKind kind, int qubit) {
        return {kind, {qubit, -1}};
    }
    static Gate cx(int control, int target) {
        return {GateKind::CX, {control, target}};
    }

    int control() const {
        return operands[0];
    }
    int target() const {
        return kind == GateKind::CX ? operands[1] : operands[0];
    }
    bool operator==(const Gate &) const = default;
};

struct Measure {
    int qubit;
    int cbit;
    bool operator==(const Measure &) const = default;
};

/// Return the qubit to |0>. Implemented as an unrecorded Z measurement
/// followed by a conditional X.
struct Reset {
    int qubit;
    bool operator==(const Reset &) const = default;
};

/// Scheduling fence across all qubits; no effect on the state.
struct Barrier {
    bool operator==(const Barrier &) const = default;
};

using Instruction = std::variant<Gate, Measure, Reset, Barrier>;

/// Qubits an instruction acts on (all qubits for a barrier).
std::vector<int> touched_qubits(const Instruction &inst, int num_qubits);

/// Ordered instruction list over a quantum and a classical register.
class Circuit {
  public:
    Circuit() = default;
    Circuit(int num_qubits, int num_cbits);

    int num_qubits() const {
        return num_qubits_;
    }
    int num_cbits() const {
        return num_cbits_;
    }
    const std::vector<Instruction> &instructions() const {
        return ops_;
    }
    std::size_t size() const {
        return ops_.size();
    }

    /// Validates operands against the registers; throws BoundsError or
    /// ConstructionError (repeated CX operand).
    Circuit &append(Instruction inst);
    Circuit &append(const Circuit &other);

    Circuit &gate(GateKind kind, int qubit) {
        return append(Gate::single(kind, qubit));
    }
    Circuit &cx(int control, int target) {
        return append(Gate::cx(control, target));
    }
    Circuit &measure(int qubit, int cbit) {
        return append(Measure{qubit, cbit});
    }
    Circuit &reset(int qubit) {
        return append(Reset{qubit});
    }
    Circuit &barrier() {
        return append(Barrier{});
    }

    std::size_t count_measurements() const;
    std::vector<Gate> cnots() const;

    bool operator==(const Circuit &) const = default;

  private:
    int num_qubits_ = 0;
    int num_cbits_ = 0;
    std::vector<Instruction> ops_;
};

}  // namespace majex
