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

#include "majex/pauli.hpp"

#include <bit>
#include <stdexcept>

#include "majex/errors.hpp"

namespace majex {
namespace {

std::size_t words_for(std::size_t width) {
    return (width + 63) / 64;
}

// Exponent of i in sigma(x1,z1) * sigma(x2,z2) for Hermitian single-qubit
// Paulis; standard table, e.g. X*Y = iZ, Y*X = -iZ.
int phase_exponent(bool x1, bool z1, bool x2, bool z2) {
    if (!x1 && !z1) {
        return 0;
    }
    if (x1 && z1) {
        return int(z2) - int(x2);
    }
    if (x1) {
        return int(z2) * (2 * int(x2) - 1);
    }
    return int(x2) * (1 - 2 * int(z2));
}

}  // namespace

PauliOperator::PauliOperator(std::size_t width)
    : width_(width), xs_(words_for(width), 0), zs_(words_for(width), 0) {
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    PauliOperator op(text.size());
    op.negative_ = negative;
    for (std::size_t q = 0; q < text.size(); ++q) {
        op.set(q, text[q]);
    }
    return op;
}

PauliOperator PauliOperator::on(std::size_t width, char letter, const std::vector<std::size_t> &qubits) {
    PauliOperator op(width);
    for (std::size_t q : qubits) {
        op.set(q, letter);
    }
    return op;
}

bool PauliOperator::x(std::size_t q) const {
    return (xs_[q / 64] >> (q % 64)) & 1;
}

bool PauliOperator::z(std::size_t q) const {
    return (zs_[q / 64] >> (q % 64)) & 1;
}

char PauliOperator::letter(std::size_t q) const {
    const bool xb = x(q), zb = z(q);
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

void PauliOperator::set(std::size_t q, char letter) {
    if (q >= width_) {
        throw BoundsError("Pauli qubit " + std::to_string(q) + " outside width " + std::to_string(width_));
    }
    bool xb = false, zb = false;
    switch (letter) {
        case 'I':
        case '_':
            break;
        case 'X':
            xb = true;
            break;
        case 'Y':
            xb = zb = true;
            break;
        case 'Z':
            zb = true;
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + letter + "'");
    }
    const std::uint64_t bit = std::uint64_t{1} << (q % 64);
    xs_[q / 64] = xb ? (xs_[q / 64] | bit) : (xs_[q / 64] & ~bit);
    zs_[q / 64] = zb ? (zs_[q / 64] | bit) : (zs_[q / 64] & ~bit);
}

bool PauliOperator::is_identity() const {
    for (std::size_t w = 0; w < xs_.size(); ++w) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

bool PauliOperator::is_z_type() const {
    for (std::uint64_t w : xs_) {
        if (w) {
            return false;
        }
    }
    return true;
}

std::size_t PauliOperator::weight() const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < xs_.size(); ++w) {
        n += std::popcount(xs_[w] | zs_[w]);
    }
    return n;
}

std::vector<std::size_t> PauliOperator::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < width_; ++q) {
        if (x(q) || z(q)) {
            out.push_back(q);
        }
    }
    return out;
}

std::uint64_t PauliOperator::x_mask() const {
    if (width_ > 64) {
        throw CapacityError("mask view needs width <= 64");
    }
    return xs_.empty() ? 0 : xs_[0];
}

std::uint64_t PauliOperator::z_mask() const {
    if (width_ > 64) {
        throw CapacityError("mask view needs width <= 64");
    }
    return zs_.empty() ? 0 : zs_[0];
}

bool PauliOperator::commutes(const PauliOperator &other) const {
    if (other.width_ != width_) {
        throw ShapeError("commutes: width " + std::to_string(width_) + " vs " + std::to_string(other.width_));
    }
    int parity = 0;
    for (std::size_t w = 0; w < xs_.size(); ++w) {
        parity ^= std::popcount((xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w])) & 1;
    }
    return parity == 0;
}

std::pair<int, PauliOperator> multiply(const PauliOperator &a, const PauliOperator &b) {
    if (a.width_ != b.width_) {
        throw ShapeError("multiply: width " + std::to_string(a.width_) + " vs " + std::to_string(b.width_));
    }
    PauliOperator c(a.width_);
    int k = (a.negative_ ? 2 : 0) + (b.negative_ ? 2 : 0);
    for (std::size_t q = 0; q < a.width_; ++q) {
        k += phase_exponent(a.x(q), a.z(q), b.x(q), b.z(q));
    }
    for (std::size_t w = 0; w < c.xs_.size(); ++w) {
        c.xs_[w] = a.xs_[w] ^ b.xs_[w];
        c.zs_[w] = a.zs_[w] ^ b.zs_[w];
    }
    return {((k % 4) + 4) % 4, std::move(c)};
}

PauliOperator PauliOperator::operator*(const PauliOperator &other) const {
    auto [k, c] = multiply(*this, other);
    if (k % 2 != 0) {
        throw std::domain_error("product of anticommuting Paulis " + str() + " * " + other.str() + " is not Hermitian");
    }
    c.negative_ = (k == 2);
    return c;
}

PauliOperator PauliOperator::restricted(const std::vector<std::size_t> &qubits) const {
    PauliOperator out(qubits.size());
    out.negative_ = negative_;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        out.set(i, letter(qubits[i]));
    }
    return out;
}

PauliOperator PauliOperator::embedded(std::size_t width, const std::vector<std::size_t> &qubits) const {
    if (qubits.size() != width_) {
        throw ShapeError("embedded: need one target qubit per factor");
    }
    PauliOperator out(width);
    out.negative_ = negative_;
    for (std::size_t i = 0; i < width_; ++i) {
        out.set(qubits[i], letter(i));
    }
    return out;
}

std::string PauliOperator::str() const {
    std::string s(negative_ ? "-" : "+");
    for (std::size_t q = 0; q < width_; ++q) {
        s += letter(q);
    }
    return s;
}

std::size_t symplectic_rank(const std::vector<PauliOperator> &ops) {
    if (ops.empty()) {
        return 0;
    }
    const std::size_t n = ops.front().width();
    const std::size_t cols = 2 * n;
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(ops.size());
    for (const auto &op : ops) {
        if (op.width() != n) {
            throw ShapeError("symplectic_rank: mixed widths");
        }
        std::vector<std::uint64_t> row(words, 0);
        for (std::size_t q = 0; q < n; ++q) {
            if (op.x(q)) {
                row[q / 64] |= std::uint64_t{1} << (q % 64);
            }
            if (op.z(q)) {
                row[(n + q) / 64] |= std::uint64_t{1} << ((n + q) % 64);
            }
        }
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][col / 64] & bit)) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r][col / 64] & bit)) {
                for (std::size_t w = 0; w < words; ++w) {
                    rows[r][w] ^= rows[rank][w];
                }
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace majex
