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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "majex/circuit.hpp"
#include "majex/noise.hpp"
#include "majex/statevec.hpp"

namespace majex {

inline constexpr const char *kRngName = "mt19937_64/seed_seq(seed,shot)";

struct ShotMetadata {
    std::uint64_t seed = 0;
    std::string rng = kRngName;
    std::string noise_id = "none";
    std::string noise_hash = "0000000000000000";
    std::string circuit_hash = "0000000000000000";
    /// Shots originally sampled. Equals the record count until postselection.
    std::size_t total_shots = 0;
    bool postselected = false;

    bool operator==(const ShotMetadata &) const = default;
};

/// Per-shot classical records. Bit k of a record is classical bit k.
struct ShotTable {
    int num_cbits = 0;
    std::vector<std::uint64_t> records;
    ShotMetadata metadata;

    std::size_t size() const {
        return records.size();
    }
    static int bit(std::uint64_t record, int cbit) {
        return static_cast<int>((record >> cbit) & 1);
    }
    bool operator==(const ShotTable &) const = default;
};

/// "01101": character k is classical bit k.
std::string record_string(std::uint64_t record, int num_cbits);

/// Stable 64-bit FNV-1a fingerprints, printed as 16 hex digits.
std::string fingerprint(const Circuit &circuit);
std::string fingerprint(const NoiseConfig &config);

/// Independent RNG stream for shot `shot` of a run seeded with `seed`.
Rng shot_rng(std::uint64_t seed, std::uint64_t shot);

/// One trajectory of `circuit` starting from `initial` (or all-|0>).
/// Noise, when given, is interleaved along the circuit's ASAP schedule.
std::uint64_t run_trajectory(const Circuit &circuit, const NoiseConfig *noise, Rng &rng,
                             const StateVector *initial = nullptr);

/// `shots` independent trajectories. Deterministic in (circuit, noise,
/// seed) regardless of `threads` (0 = hardware concurrency).
/// Throws std::invalid_argument when shots < 1.
ShotTable run_shots(const Circuit &circuit, long long shots, const std::optional<NoiseConfig> &noise,
                    std::uint64_t seed, unsigned threads = 0);

/// Exact noiseless distribution over classical records, by enumerating
/// every measurement branch.
std::map<std::uint64_t, double> exact_distribution(const Circuit &circuit, const StateVector *initial = nullptr);

/// Runs the circuit noiselessly on `state`, forcing each measurement to
/// the value it writes in `record`. Returns the joint probability of those
/// outcomes (0 if any is impossible, leaving `state` unspecified).
double run_forced(const Circuit &circuit, StateVector &state, std::uint64_t record);

/// Ideal projective measurement of each operator in turn, starting from
/// `initial`. Bit k of a key is the outcome of sequence[k] (1 for the -1
/// eigenvalue). Branches at or below 1e-12 are dropped.
std::map<std::uint64_t, double> projective_distribution(const StateVector &initial,
                                                        const std::vector<PauliOperator> &sequence);

/// Total-variation distance between two distributions over records.
double total_variation(const std::map<std::uint64_t, double> &a, const std::map<std::uint64_t, double> &b);

}  // namespace majex
