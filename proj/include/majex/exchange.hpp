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

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "majex/circuit.hpp"
#include "majex/lattice.hpp"
#include "majex/pauli.hpp"
#include "majex/simulate.hpp"

namespace majex {

/// How the two parity measurements obtain their ancillas.
///   Ideal:         e1 serves YY, e2 serves XX; cbits 0 = YY, 1 = XX.
///   SharedAncilla: e2 (the shared e_{1/2}) serves both and is never reset;
///                  its YY value is copied onto e1 first. cbit 0 = e_{1/2}
///                  (XX xor YY), cbit 1 = e1 (YY).
/// In both layouts cbit 2 = Z(v2), 3 = Z(v1), 4 = Z(v3).
enum class AncillaLayout { Ideal, SharedAncilla };

inline constexpr int kExchangeQubits = 5;
inline constexpr int kExchangeCbits = 5;

struct ExperimentDef {
    int v1 = 0;
    int v2 = 1;
    int v3 = 2;
    int e1 = 3;
    int e2 = 4;  // e_{1/2} in the shared layout
    AncillaLayout layout = AncillaLayout::Ideal;

    /// Throws ConstructionError unless the five roles are distinct qubits
    /// in [0, 5).
    void validate() const;
    std::array<int, 5> roles() const {
        return {v1, v2, v3, e1, e2};
    }
};

/// Outcome bits of one shot after undoing the layout's encoding.
struct ExchangeOutcome {
    int yy;
    int xx;
    int z2;
    int v1;
    int v3;
};

ExchangeOutcome decode(const ExperimentDef &def, std::uint64_t record);

/// YY, XX and Z(v2) all read 0: no stray fermion was flagged.
bool accepted(const ExperimentDef &def, std::uint64_t record);

/// Final readout basis for v1 and v3. Z reads logical Z = Z1. X reads
/// logical X = Y1 Z2 X3. Y_YZY and Y_XZX read the two forms of logical Y.
enum class ReadoutSetting { Z, X, Y_YZY, Y_XZX };

std::string_view name(ReadoutSetting setting);

/// Sign s with Y_L = s * (Y1 Z2 Y3) = -s * (X1 Z2 X3) relative to the
/// logical X and Z above, so both Y settings estimate the same quantity.
/// Exposed for the tests that derive it from the algebra.
inline constexpr int kXzxRelativeSign = -1;

/// The exchange leaves the logical qubit in the Y eigenstate with this
/// eigenvalue of Y_L = Y1 Z2 Y3 (pinned by the noiseless projector oracle).
inline constexpr int kExchangeLogicalYSign = +1;

/// The five-qubit exchange in the ideal layout: YY(v1, v2) on e1, XX(v2, v3)
/// on e2, Z(v2), then Z readouts of v1 and v3 rotated per `setting`.
/// The shared-ancilla layout is produced by compile().
Circuit ideal_circuit(const ExperimentDef &def, ReadoutSetting setting = ReadoutSetting::Z);

/// Pauli operators measured by the logical readout of `setting` on the
/// vertex qubits (width 5 with roles from `def`).
PauliOperator logical_operator(const ExperimentDef &def, ReadoutSetting setting);

/// Keeps the accepted shots; metadata.total_shots is preserved.
ShotTable postselect(const ShotTable &table, const ExperimentDef &def);

struct CorrelationResult {
    double c = 0.0;
    double stderr_c = 0.0;
    /// Counts of (v1, v3) = 00, 01, 10, 11.
    std::array<std::size_t, 4> counts{};
    std::size_t retained = 0;
};

/// C = P(00) + P(11) - P(01) - P(10) over the (v1, v3) readouts of every
/// shot in `table`. Standard error sqrt((1 - C^2) / N). Throws
/// UndefinedStatisticError for an empty table.
CorrelationResult correlation(const ShotTable &table, const ExperimentDef &def);

struct Estimate {
    double value = 0.0;
    double stderr_value = 0.0;
    std::size_t shots = 0;
};

/// Mean eigenvalue of the logical operator read by `setting` over the
/// shots of an already post-selected table. For Y_XZX the value is scaled
/// by kXzxRelativeSign so it estimates <Y_L>. Throws
/// UndefinedStatisticError for an empty table.
Estimate logical_expectation(const ShotTable &table, const ExperimentDef &def, ReadoutSetting setting);

struct TomographyResult {
    std::array<double, 3> bloch{};
    std::array<double, 3> bloch_stderr{};
    Mat2 density{};
    double fidelity = 0.0;
    double closest_pure = 0.0;
};

/// rho = (I + xX + yY + zZ) / 2. Fidelity to the Y eigenstate with
/// eigenvalue `target_sign` is (1 + s y) / 2; the closest pure state uses
/// the unit Bloch vector, (1 + s y / |r|) / 2, and is 1/2 when r = 0.
TomographyResult reconstruct(double x, double y, double z, int target_sign = kExchangeLogicalYSign);

/// Builds the 5-qubit definition from a truncated exchange, checking that
/// its measurements are YY(v1, v2), XX(v2, v3), Z(v2) and its readouts
/// Z(v1), Z(v3). Throws TopologyError on any other shape.
ExperimentDef experiment_from(const TruncatedExperiment &truncated);

/// Post-selected (v1, v3) readout distribution: p[2 * v1 + v3].
struct ReadoutDistribution {
    double acceptance = 0.0;
    std::array<double, 4> p{};
};

double total_variation(const ReadoutDistribution &a, const ReadoutDistribution &b);

/// Exact noiseless distribution of an exchange circuit decoded with `def`.
ReadoutDistribution circuit_distribution(const Circuit &circuit, const ExperimentDef &def,
                                         const StateVector *initial = nullptr);

/// The untruncated schedule simulated densely on every vertex qubit with
/// ideal projectors: start from |0...0>, project every hexagon check onto
/// +1 (the Z-type checks already are), measure the three added checks,
/// then read out the yy_partner's check (v1) and ZZ_b (v3). Throws
/// CapacityError above kMaxDenseQubits vertices and TopologyError for a
/// schedule without an exchange site.
ReadoutDistribution schedule_distribution(const Lattice &lattice, const ExchangeSchedule &schedule);

}  // namespace majex
