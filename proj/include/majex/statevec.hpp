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

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "majex/circuit.hpp"
#include "majex/kernels.hpp"
#include "majex/pauli.hpp"

namespace majex {

using Rng = std::mt19937_64;

inline constexpr int kMaxDenseQubits = 24;

/// Probabilities at or below this are treated as impossible outcomes.
inline constexpr double kImpossibleCutoff = 1e-12;

/// Dense state vector. Qubit q is bit q of the basis index, so qubit 0 is
/// the least significant bit.
class StateVector {
  public:
    /// All-|0> state. Throws CapacityError outside [1, kMaxDenseQubits].
    explicit StateVector(int num_qubits, const KernelTable &kernels = default_kernels());

    /// Normalized copy of `amps`. The length must be a power of two.
    static StateVector from_amplitudes(std::vector<cplx> amps, const KernelTable &kernels = default_kernels());

    int num_qubits() const {
        return num_qubits_;
    }
    std::size_t size() const {
        return amps_.size();
    }
    std::span<const cplx> amplitudes() const {
        return amps_;
    }
    const KernelTable &kernels() const {
        return *kernels_;
    }

    void apply(const Gate &gate);
    /// Arbitrary 2x2 matrix, not necessarily unitary (used for Kraus maps).
    void apply_matrix(int qubit, const Mat2 &m);
    void apply_pauli(const PauliOperator &op);

    double norm() const;
    void renormalize();

    double probability_one(int qubit) const;

    /// Condition qubit on Z outcome `bit` and renormalize. Returns the
    /// branch probability; throws ImpossibleOutcomeError if it is <= 1e-12.
    double collapse(int qubit, int bit);

    /// Born-rule Z measurement with state update.
    int measure_z(int qubit, Rng &rng);

    /// <psi|op|psi>. Throws ShapeError on width mismatch.
    double expectation(const PauliOperator &op) const;

    /// Condition on the outcome of measuring op (sign 0 -> +1 eigenvalue,
    /// sign 1 -> -1) via the projector (I +- op)/2. Returns the branch
    /// probability and renormalizes; throws ImpossibleOutcomeError when
    /// the probability is <= 1e-12.
    double project(const PauliOperator &op, int sign);

    /// Probability of the projector branch without modifying the state.
    double projector_probability(const PauliOperator &op, int sign) const;

  private:
    StateVector(int num_qubits, std::vector<cplx> amps, const KernelTable &kernels);
    void check_qubit(int q) const;
    void check_width(const PauliOperator &op) const;

    int num_qubits_;
    std::vector<cplx> amps_;
    const KernelTable *kernels_;
};

/// |<a|b>|^2 for normalized states of equal width.
double fidelity(const StateVector &a, const StateVector &b);

/// Places an n-qubit state on `qubits` of a wider all-|0> register:
/// local qubit k of `local` becomes qubit qubits[k].
StateVector embed(const StateVector &local, int num_qubits, std::span<const int> qubits);

/// Haar-ish random state from normally distributed amplitudes.
StateVector random_state(int num_qubits, Rng &rng, const KernelTable &kernels = default_kernels());

}  // namespace majex
