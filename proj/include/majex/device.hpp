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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "majex/noise.hpp"
#include "majex/schedule.hpp"

namespace majex {

struct DeviceQubit {
    double t1_us = 0.0;
    double t2_us = 0.0;
    double readout_err = 0.0;
    double single_err = 0.0;
    bool operator==(const DeviceQubit &) const = default;
};

/// Connectivity and calibration of a small device.
///
/// File format (JSON):
///   {
///     "name": "...", "synthetic": true,
///     "qubits": [{"t1_us": 50, "t2_us": 60, "readout_err": 0.04,
///                 "single_err": 0.002}, ...],
///     "allowed_cnots": [[0, 2], [1, 2], ...],
///     "cnots": [{"pair": [0, 2], "err": 0.03}, ...],
///     "durations": {"cnot_ns": 300, "single_ns": 80, "measure_ns": 1000}
///   }
/// "single_err", "synthetic", "name" and "durations.reset_ns" are optional.
/// An allowed CNOT without an "err" entry is a validation error. Pairs not
/// listed at all (used only by uncompiled circuits under this noise) take
/// the mean listed error.
struct DeviceModel {
    std::string name = "device";
    bool synthetic = false;
    std::vector<DeviceQubit> qubits;
    std::set<std::pair<int, int>> allowed_cnots;
    std::map<std::pair<int, int>, double> cnot_err;
    double cnot_ns = 0.0;
    double single_ns = 0.0;
    double measure_ns = 0.0;
    double reset_ns = 0.0;

    int num_qubits() const {
        return static_cast<int>(qubits.size());
    }

    /// Throws ValidationError when ranges or T2 <= 2 T1 are violated.
    void validate() const;

    bool allows(int control, int target) const {
        return allowed_cnots.count({control, target}) != 0;
    }
    bool connected(int a, int b) const {
        return allows(a, b) || allows(b, a);
    }
    /// Error of the CNOT pair, in either orientation.
    double cnot_error(int a, int b) const;

    /// The qubit that is the target of every allowed CNOT, if any.
    std::optional<int> hub() const;

    GateDurations durations() const;

    /// Star device: every other qubit may only control `hub`. Identical
    /// calibration on all qubits and pairs.
    static DeviceModel star(int num_qubits, int hub, const DeviceQubit &qubit, double cnot_err, double cnot_ns,
                            double single_ns, double measure_ns);

    bool operator==(const DeviceModel &) const = default;
};

/// Throws ParseError on malformed JSON and ValidationError on bad values.
DeviceModel parse_device(std::string_view json_text);
DeviceModel load_device(const std::string &path);
std::string device_to_json(const DeviceModel &device);

/// Trajectory noise with each circuit qubit q taking physical qubit q's
/// calibration. Times are converted to seconds.
NoiseConfig noise_from_device(const DeviceModel &device);

}  // namespace majex
