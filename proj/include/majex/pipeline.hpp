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

#include <optional>

#include "majex/compile.hpp"
#include "majex/exchange.hpp"
#include "majex/noise.hpp"

namespace majex {

struct RunOptions {
    long long shots = 24576;
    std::uint64_t seed = 0;
    std::optional<NoiseConfig> noise;
    /// Required when compiled is set.
    std::optional<DeviceModel> device;
    bool compiled = false;
    /// Explicit role map; assign_qubits(device) when absent.
    std::optional<QubitAssignment> assignment;
    unsigned threads = 0;
};

struct ExchangeRun {
    ReadoutSetting setting = ReadoutSetting::Z;
    ExperimentDef def;
    Circuit circuit;
    std::optional<QubitAssignment> assignment;
    ShotTable raw;
    ShotTable kept;
};

/// Builds (and optionally compiles) the exchange circuit for `setting`,
/// samples it and post-selects. Throws std::invalid_argument for
/// compiled runs without a device.
ExchangeRun run_exchange(ReadoutSetting setting, const RunOptions &options);

struct TomographyRun {
    /// X, Y (YZY form) and Z settings, in that order. Setting k is sampled
    /// with seed + k.
    std::array<ExchangeRun, 3> runs;
    std::array<Estimate, 3> estimates;
    TomographyResult result;
};

/// Throws UndefinedStatisticError when a setting retains no shots.
TomographyRun run_tomography(const RunOptions &options);

}  // namespace majex
