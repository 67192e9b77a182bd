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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace majex {

/// Hermitian Pauli string: sign * (tensor product of I/X/Y/Z).
///
/// Qubit i carries X when only its x bit is set, Z when only its z bit is
/// set, and Y (the Hermitian Y, not XZ) when both are set.
class PauliOperator {
  public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t width);

    /// Parses strings such as "XIZ", "+YY", "-ZZI". Character k is qubit k.
    static PauliOperator from_string(std::string_view text);

    /// Width `width` operator with `letter` on each listed qubit.
    static PauliOperator on(std::size_t width, char letter, const std::vector<std::size_t> &qubits);

    std::size_t width() const {
        return width_;
    }
    bool negative() const {
        return negative_;
    }
    int sign() const {
        return negative_ ? -1 : +1;
    }
    void set_negative(bool negative) {
        negative_ = negative;
    }

    bool x(std::size_t q) const;
    bool z(std::size_t q) const;
    /// 'I', 'X', 'Y' or 'Z'.
    char letter(std::size_t q) const;
    void set(std::size_t q, char letter);

    bool is_identity() const;
    /// True when every non-identity factor is Z.
    bool is_z_type() const;
    std::size_t weight() const;
    std::vector<std::size_t> support() const;

    /// Bit masks of the x and z parts; requires width <= 64.
    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;

    bool commutes(const PauliOperator &other) const;

    /// Product of two commuting operators. Throws std::domain_error when the
    /// operators anticommute (the product would be anti-Hermitian).
    PauliOperator operator*(const PauliOperator &other) const;

    /// Keeps only the listed qubits, in order, as a narrower operator.
    PauliOperator restricted(const std::vector<std::size_t> &qubits) const;

    /// Same factors placed on `qubits` of a wider register.
    PauliOperator embedded(std::size_t width, const std::vector<std::size_t> &qubits) const;

    std::string str() const;

    bool operator==(const PauliOperator &other) const = default;

  private:
    std::size_t width_ = 0;
    bool negative_ = false;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;

    friend std::pair<int, PauliOperator> multiply(const PauliOperator &a, const PauliOperator &b);
};

/// a * b = i^k * c, with c carrying a positive sign. Returns {k mod 4, c}.
std::pair<int, PauliOperator> multiply(const PauliOperator &a, const PauliOperator &b);

/// Rank over GF(2) of the symplectic (x|z) rows; signs are ignored.
std::size_t symplectic_rank(const std::vector<PauliOperator> &ops);

}  // namespace majex
