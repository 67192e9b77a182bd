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

#include <string>
#include <string_view>

#include "majex/circuit.hpp"

namespace majex {

// Line-oriented circuit text:
//
//   # comment (also allowed after a statement)
//   qubits 5
//   cbits 5
//   h 0
//   sdg 1
//   cx 0 3
//   measure 3 -> 0
//   reset 3
//   barrier
//
// `qubits` must precede every other statement; `cbits` is optional
// (default 0) and must come before the first instruction. Blank lines are
// ignored. Gate mnemonics: x y z h s sdg cx.

/// Throws ParseError carrying the 1-based line and column of the offending
/// token.
Circuit parse_circuit(std::string_view text);

/// Canonical text: header lines then one statement per line, no comments.
std::string print_circuit(const Circuit &circuit);

Circuit load_circuit(const std::string &path);

}  // namespace majex
