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

#include "majex/statevec.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "majex/errors.hpp"

namespace majex {

StateVector::StateVector(int num_qubits, const KernelTable &kernels) : num_qubits_(num_qubits), kernels_(&kernels) {
    if (num_qubits < 1 || num_qubits > kMaxDenseQubits) {
        throw CapacityError("dense state needs 1.." + std::to_string(kMaxDenseQubits) + " qubits, got " +
                            std::to_string(num_qubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<cplx> amps, const KernelTable &kernels)
    : num_qubits_(num_qubits), amps_(std::move(amps)), kernels_(&kernels) {
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps, const KernelTable &kernels) {
    const std::size_t n = amps.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw ShapeError("amplitude count must be a power of two >= 2, got " + std::to_string(n));
    }
    const int nq = std::countr_zero(n);
    if (nq > kMaxDenseQubits) {
        throw CapacityError("dense state limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    StateVector s(nq, std::move(amps), kernels);
    s.renormalize();
    return s;
}

void StateVector::check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_) {
        throw BoundsError("qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                          "-qubit state");
    }
}

void StateVector::check_width(const PauliOperator &op) const {
    if (op.width() != static_cast<std::size_t>(num_qubits_)) {
        throw ShapeError("operator width " + std::to_string(op.width()) + " vs state width " +
                         std::to_string(num_qubits_));
    }
}

void StateVector::apply(const Gate &gate) {
    if (gate.kind == GateKind::CX) {
        check_qubit(gate.operands[0]);
        check_qubit(gate.operands[1]);
        if (gate.operands[0] == gate.operands[1]) {
            throw BoundsError("cx control and target coincide");
        }
        kernels_->apply_cx(amps_.data(), amps_.size(), gate.operands[0], gate.operands[1]);
        return;
    }
    apply_matrix(gate.operands[0], gate_matrix(gate.kind));
}

void StateVector::apply_matrix(int qubit, const Mat2 &m) {
    check_qubit(qubit);
    kernels_->apply_1q(amps_.data(), amps_.size(), qubit, m);
}

void StateVector::apply_pauli(const PauliOperator &op) {
    check_width(op);
    for (int q = 0; q < num_qubits_; ++q) {
        switch (op.letter(q)) {
            case 'X':
                apply(Gate::single(GateKind::X, q));
                break;
            case 'Y':
                apply(Gate::single(GateKind::Y, q));
                break;
            case 'Z':
                apply(Gate::single(GateKind::Z, q));
                break;
            default:
                break;
        }
    }
    if (op.negative()) {
        kernels_->scale(amps_.data(), amps_.size(), -1.0);
    }
}

double StateVector::norm() const {
    return std::sqrt(kernels_->norm2(amps_.data(), amps_.size()));
}

void StateVector::renormalize() {
    const double n = norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidStateError("state has zero or non-finite norm");
    }
    kernels_->scale(amps_.data(), amps_.size(), 1.0 / n);
}

double StateVector::probability_one(int qubit) const {
    check_qubit(qubit);
    return kernels_->prob_one(amps_.data(), amps_.size(), qubit);
}

double StateVector::collapse(int qubit, int bit) {
    check_qubit(qubit);
    const double total = kernels_->norm2(amps_.data(), amps_.size());
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw InvalidStateError("state has zero or non-finite norm");
    }
    const double p1 = kernels_->prob_one(amps_.data(), amps_.size(), qubit) / total;
    const double p = bit ? p1 : 1.0 - p1;
    if (p <= kImpossibleCutoff) {
        throw ImpossibleOutcomeError("Z outcome " + std::to_string(bit) + " on qubit " + std::to_string(qubit) +
                                     " has probability " + std::to_string(p));
    }
    kernels_->collapse(amps_.data(), amps_.size(), qubit, bit, 1.0 / std::sqrt(p * total));
    return p;
}

int StateVector::measure_z(int qubit, Rng &rng) {
    check_qubit(qubit);
    const double total = kernels_->norm2(amps_.data(), amps_.size());
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw InvalidStateError("state has zero or non-finite norm");
    }
    const double p1 = kernels_->prob_one(amps_.data(), amps_.size(), qubit) / total;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const int bit = uniform(rng) < p1 ? 1 : 0;
    const double p = bit ? p1 : 1.0 - p1;
    kernels_->collapse(amps_.data(), amps_.size(), qubit, bit, 1.0 / std::sqrt(p * total));
    return bit;
}

namespace {

// <psi| (X^x Z^z) |psi> without the i^{#Y} and sign factors.
cplx raw_pauli_overlap(std::span<const cplx> amps, std::uint64_t xmask, std::uint64_t zmask) {
    cplx total{0.0, 0.0};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const cplx term = std::conj(amps[i ^ xmask]) * amps[i];
        total += (std::popcount(zmask & i) & 1) ? -term : term;
    }
    return total;
}

cplx pauli_prefactor(const PauliOperator &op) {
    static const cplx powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const int ny = std::popcount(op.x_mask() & op.z_mask());
    const cplx p = powers[ny % 4];
    return op.negative() ? -p : p;
}

}  // namespace

double StateVector::expectation(const PauliOperator &op) const {
    check_width(op);
    const cplx value = pauli_prefactor(op) * raw_pauli_overlap(amps_, op.x_mask(), op.z_mask());
    return value.real() / kernels_->norm2(amps_.data(), amps_.size());
}

double StateVector::projector_probability(const PauliOperator &op, int sign) const {
    const double e = expectation(op);
    return sign ? (1.0 - e) / 2.0 : (1.0 + e) / 2.0;
}

double StateVector::project(const PauliOperator &op, int sign) {
    check_width(op);
    const double p = projector_probability(op, sign);
    if (p <= kImpossibleCutoff) {
        throw ImpossibleOutcomeError("projection of " + op.str() + " onto sign " + std::to_string(sign) +
                                     " has probability " + std::to_string(p));
    }
    std::vector<cplx> flipped = amps_;
    StateVector image(num_qubits_, std::move(flipped), *kernels_);
    image.apply_pauli(op);
    const double s = sign ? -1.0 : 1.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] = 0.5 * (amps_[i] + s * image.amps_[i]);
    }
    renormalize();
    return p;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ShapeError("fidelity: width mismatch");
    }
    cplx overlap{0.0, 0.0};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        overlap += std::conj(x[i]) * y[i];
    }
    return std::norm(overlap);
}

StateVector embed(const StateVector &local, int num_qubits, std::span<const int> qubits) {
    if (qubits.size() != static_cast<std::size_t>(local.num_qubits())) {
        throw ShapeError("embed: one target qubit per local qubit required");
    }
    if (num_qubits < 1 || num_qubits > kMaxDenseQubits) {
        throw CapacityError("embed: unsupported width");
    }
    std::vector<cplx> amps(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
    const auto src = local.amplitudes();
    for (std::size_t i = 0; i < src.size(); ++i) {
        std::size_t j = 0;
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            if (qubits[k] < 0 || qubits[k] >= num_qubits) {
                throw BoundsError("embed: target qubit out of range");
            }
            if ((i >> k) & 1) {
                j |= std::size_t{1} << qubits[k];
            }
        }
        amps[j] = src[i];
    }
    return StateVector::from_amplitudes(std::move(amps), local.kernels());
}

StateVector random_state(int num_qubits, Rng &rng, const KernelTable &kernels) {
    if (num_qubits < 1 || num_qubits > kMaxDenseQubits) {
        throw CapacityError("random_state: unsupported width");
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cplx> amps(std::size_t{1} << num_qubits);
    for (auto &a : amps) {
        const double re = normal(rng);
        const double im = normal(rng);
        a = {re, im};
    }
    return StateVector::from_amplitudes(std::move(amps), kernels);
}

}  // namespace majex
