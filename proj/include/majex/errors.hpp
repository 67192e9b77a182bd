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

#include <stdexcept>
#include <string>

namespace majex {

/// Requested register is larger than the dense simulator supports.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Qubit or classical-bit index outside its register.
struct BoundsError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Operator width does not match the state it is applied to.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// State has zero (or non-finite) norm.
struct InvalidStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Conditioning on an outcome whose probability is below the cutoff.
struct ImpossibleOutcomeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed circuit, lattice, or measurement construction.
struct ConstructionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Lattice edges do not form the pattern an operation requires.
struct TopologyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A CNOT (or an assignment) cannot be realized on the device connectivity.
struct RoutingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Config file contents violate a physical or range constraint.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A statistic has no defined value (e.g. C over zero retained shots).
struct UndefinedStatisticError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Circuit text could not be parsed. Line and column are 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             message),
          line_(line),
          column_(column) {
    }

    int line() const {
        return line_;
    }
    int column() const {
        return column_;
    }

  private:
    int line_;
    int column_;
};

}  // namespace majex
