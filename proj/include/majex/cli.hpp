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

#include <iosfwd>
#include <string>
#include <vector>

namespace majex::cli {

inline constexpr int kExitOk = 0;
/// Unreadable or invalid input file (device, noise, circuit).
inline constexpr int kExitInput = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndefinedStatistic = 3;
inline constexpr int kExitRouting = 4;

/// Runs one command. args excludes the program name, e.g.
/// {"run", "--experiment", "exchange", "--shots", "100"}.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace majex::cli
