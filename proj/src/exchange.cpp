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

#include "majex/exchange.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "majex/errors.hpp"
#include "majex/parity.hpp"

namespace majex {
namespace {

constexpr int kCbitYY = 0;
constexpr int kCbitXX = 1;
constexpr int kCbitZ2 = 2;
constexpr int kCbitV1 = 3;
constexpr int kCbitV3 = 4;

// Readout letters on (v1, v3).
std::pair<char, char> readout_letters(ReadoutSetting setting) {
    switch (setting) {
        case ReadoutSetting::Z:
            return {'Z', 'Z'};
        case ReadoutSetting::X:
            return {'Y', 'X'};
        case ReadoutSetting::Y_YZY:
            return {'Y', 'Y'};
        case ReadoutSetting::Y_XZX:
            return {'X', 'X'};
    }
    return {'Z', 'Z'};
}

double binomial_stderr(double mean, std::size_t n) {
    return std::sqrt(std::max(0.0, 1.0 - mean * mean) / static_cast<double>(n));
}

}  // namespace

void ExperimentDef::validate() const {
    const auto r = roles();
    const std::set<int> distinct(r.begin(), r.end());
    if (distinct.size() != r.size()) {
        throw ConstructionError("exchange roles must be five distinct qubits");
    }
    if (*distinct.begin() < 0 || *distinct.rbegin() >= kExchangeQubits) {
        throw ConstructionError("exchange roles must lie in [0, 5)");
    }
}

ExchangeOutcome decode(const ExperimentDef &def, std::uint64_t record) {
    ExchangeOutcome o{};
    if (def.layout == AncillaLayout::Ideal) {
        o.yy = ShotTable::bit(record, kCbitYY);
        o.xx = ShotTable::bit(record, kCbitXX);
    } else {
        o.yy = ShotTable::bit(record, 1);
        o.xx = ShotTable::bit(record, 0) ^ o.yy;
    }
    o.z2 = ShotTable::bit(record, kCbitZ2);
    o.v1 = ShotTable::bit(record, kCbitV1);
    o.v3 = ShotTable::bit(record, kCbitV3);
    return o;
}

bool accepted(const ExperimentDef &def, std::uint64_t record) {
    const ExchangeOutcome o = decode(def, record);
    return o.yy == 0 && o.xx == 0 && o.z2 == 0;
}

std::string_view name(ReadoutSetting setting) {
    switch (setting) {
        case ReadoutSetting::Z:
            return "Z";
        case ReadoutSetting::X:
            return "X";
        case ReadoutSetting::Y_YZY:
            return "Y_YZY";
        case ReadoutSetting::Y_XZX:
            return "Y_XZX";
    }
    return "?";
}

Circuit ideal_circuit(const ExperimentDef &def, ReadoutSetting setting) {
    def.validate();
    Circuit c(kExchangeQubits, kExchangeCbits);
    c.append(parity_circuit({ParityBasis::YY, {def.v1, def.v2}, def.e1, kCbitYY}, kExchangeQubits, kExchangeCbits));
    c.append(parity_circuit({ParityBasis::XX, {def.v2, def.v3}, def.e2, kCbitXX}, kExchangeQubits, kExchangeCbits));
    c.measure(def.v2, kCbitZ2);
    const auto [l1, l3] = readout_letters(setting);
    for (GateKind g : basis_rotation(l1)) {
        c.gate(g, def.v1);
    }
    for (GateKind g : basis_rotation(l3)) {
        c.gate(g, def.v3);
    }
    c.measure(def.v1, kCbitV1);
    c.measure(def.v3, kCbitV3);
    return c;
}

PauliOperator logical_operator(const ExperimentDef &def, ReadoutSetting setting) {
    PauliOperator op(kExchangeQubits);
    const auto [l1, l3] = readout_letters(setting);
    op.set(def.v1, l1);
    if (setting != ReadoutSetting::Z) {
        op.set(def.v2, 'Z');
        op.set(def.v3, l3);
    }
    return op;
}

ShotTable postselect(const ShotTable &table, const ExperimentDef &def) {
    ShotTable out;
    out.num_cbits = table.num_cbits;
    out.metadata = table.metadata;
    out.metadata.postselected = true;
    std::copy_if(table.records.begin(), table.records.end(), std::back_inserter(out.records),
                 [&](std::uint64_t r) { return accepted(def, r); });
    return out;
}

CorrelationResult correlation(const ShotTable &table, const ExperimentDef &def) {
    if (table.records.empty()) {
        throw UndefinedStatisticError("correlation C is undefined over zero retained shots");
    }
    CorrelationResult r;
    for (std::uint64_t rec : table.records) {
        const ExchangeOutcome o = decode(def, rec);
        ++r.counts[2 * o.v1 + o.v3];
    }
    r.retained = table.records.size();
    const double n = static_cast<double>(r.retained);
    r.c = (static_cast<double>(r.counts[0]) + static_cast<double>(r.counts[3]) - static_cast<double>(r.counts[1]) -
           static_cast<double>(r.counts[2])) /
          n;
    r.stderr_c = binomial_stderr(r.c, r.retained);
    return r;
}

Estimate logical_expectation(const ShotTable &table, const ExperimentDef &def, ReadoutSetting setting) {
    if (table.records.empty()) {
        throw UndefinedStatisticError("logical expectation is undefined over zero retained shots");
    }
    long long sum = 0;
    for (std::uint64_t rec : table.records) {
        const ExchangeOutcome o = decode(def, rec);
        const int parity = setting == ReadoutSetting::Z ? o.v1 : (o.v1 ^ o.v3 ^ o.z2);
        sum += parity ? -1 : 1;
    }
    Estimate e;
    e.shots = table.records.size();
    e.value = static_cast<double>(sum) / static_cast<double>(e.shots);
    if (setting == ReadoutSetting::Y_XZX) {
        e.value *= kXzxRelativeSign;
    }
    e.stderr_value = binomial_stderr(e.value, e.shots);
    return e;
}

TomographyResult reconstruct(double x, double y, double z, int target_sign) {
    TomographyResult t;
    t.bloch = {x, y, z};
    const cplx i{0.0, 1.0};
    t.density = {0.5 * (1.0 + z), 0.5 * (x - i * y), 0.5 * (x + i * y), 0.5 * (1.0 - z)};
    const double s = target_sign >= 0 ? 1.0 : -1.0;
    t.fidelity = 0.5 * (1.0 + s * y);
    const double r = std::sqrt(x * x + y * y + z * z);
    t.closest_pure = r > 0.0 ? 0.5 * (1.0 + s * y / r) : 0.5;
    return t;
}

ExperimentDef experiment_from(const TruncatedExperiment &truncated) {
    if (truncated.vertices.size() != 3 || truncated.edges.size() != 2) {
        throw TopologyError("truncated exchange must have 3 vertex and 2 edge qubits");
    }
    auto expect = [](const std::vector<Generator> &gens, std::vector<std::string> want, const char *what) {
        std::vector<std::string> got;
        for (const auto &g : gens) {
            got.push_back(g.op.str());
        }
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) {
            throw TopologyError(std::string("truncated exchange has unexpected ") + what);
        }
    };
    if (truncated.measurements.size() != 3 || truncated.measurements[0].op.str() != "+YYI" ||
        truncated.measurements[1].op.str() != "+IXX" || truncated.measurements[2].op.str() != "+IZI") {
        throw TopologyError("truncated exchange measurements must be YY(v1,v2), XX(v2,v3), Z(v2)");
    }
    expect(truncated.readout, {"+ZII", "+IIZ"}, "readout");
    ExperimentDef def;
    def.v1 = 0;
    def.v2 = 1;
    def.v3 = 2;
    def.e1 = 3;
    def.e2 = 4;
    return def;
}

double total_variation(const ReadoutDistribution &a, const ReadoutDistribution &b) {
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        sum += std::abs(a.p[k] - b.p[k]);
    }
    return 0.5 * sum;
}

ReadoutDistribution circuit_distribution(const Circuit &circuit, const ExperimentDef &def,
                                         const StateVector *initial) {
    ReadoutDistribution out;
    for (const auto &[rec, p] : exact_distribution(circuit, initial)) {
        if (!accepted(def, rec)) {
            continue;
        }
        const ExchangeOutcome o = decode(def, rec);
        out.acceptance += p;
        out.p[2 * o.v1 + o.v3] += p;
    }
    if (out.acceptance > 0.0) {
        for (double &x : out.p) {
            x /= out.acceptance;
        }
    }
    return out;
}

ReadoutDistribution schedule_distribution(const Lattice &lattice, const ExchangeSchedule &schedule) {
    if (!schedule.site || schedule.steps.size() != 3) {
        throw TopologyError("schedule_distribution needs a three-step exchange");
    }
    const int n = static_cast<int>(lattice.num_vertices());
    if (n > kMaxDenseQubits) {
        throw CapacityError("lattice too large for dense simulation");
    }
    StateVector state(n);
    for (const auto &g : schedule.initial) {
        if (g.label.kind == GeneratorKind::Hexagon) {
            state.project(g.op, 0);
        }
    }
    auto check = [&](const GeneratorLabel &label) {
        for (const auto &g : schedule.initial) {
            if (g.label == label) {
                return g.op;
            }
        }
        throw TopologyError("readout check " + label.str() + " is not an initial generator");
    };
    const ExchangeSite &site = *schedule.site;
    std::vector<PauliOperator> sequence;
    for (const auto &step : schedule.steps) {
        sequence.push_back(step.added.op);
    }
    sequence.push_back(check(site.yy_partner_check));
    sequence.push_back(check({GeneratorKind::Edge, site.zz_b}));

    ReadoutDistribution out;
    for (const auto &[rec, p] : projective_distribution(state, sequence)) {
        if ((rec & 7) != 0) {
            continue;
        }
        out.acceptance += p;
        out.p[2 * ShotTable::bit(rec, 3) + ShotTable::bit(rec, 4)] += p;
    }
    if (out.acceptance > 0.0) {
        for (double &x : out.p) {
            x /= out.acceptance;
        }
    }
    return out;
}

}  // namespace majex
