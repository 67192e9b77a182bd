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

#include "majex/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "majex/errors.hpp"

namespace majex {
namespace {

class Fnv1a {
  public:
    void add(std::uint64_t v) {
        for (int k = 0; k < 8; ++k) {
            h_ ^= (v >> (8 * k)) & 0xff;
            h_ *= 0x100000001b3ULL;
        }
    }
    void add(double d) {
        add(std::bit_cast<std::uint64_t>(d));
    }
    void add(const std::string &s) {
        for (unsigned char c : s) {
            h_ ^= c;
            h_ *= 0x100000001b3ULL;
        }
        add(std::uint64_t{s.size()});
    }
    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
        return buf;
    }

  private:
    std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

void check_cbits(const Circuit &circuit) {
    if (circuit.num_cbits() > 64) {
        throw CapacityError("shot records hold at most 64 classical bits");
    }
}

StateVector initial_state(const Circuit &circuit, const StateVector *initial) {
    if (initial == nullptr) {
        return StateVector(circuit.num_qubits());
    }
    if (initial->num_qubits() != circuit.num_qubits()) {
        throw ShapeError("initial state width does not match circuit");
    }
    return *initial;
}

std::uint64_t with_bit(std::uint64_t record, int cbit, int value) {
    const std::uint64_t mask = std::uint64_t{1} << cbit;
    return value ? (record | mask) : (record & ~mask);
}

}  // namespace

std::string record_string(std::uint64_t record, int num_cbits) {
    std::string s(num_cbits, '0');
    for (int k = 0; k < num_cbits; ++k) {
        if ((record >> k) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

std::string fingerprint(const Circuit &circuit) {
    Fnv1a h;
    h.add(std::uint64_t(circuit.num_qubits()));
    h.add(std::uint64_t(circuit.num_cbits()));
    for (const auto &inst : circuit.instructions()) {
        h.add(std::uint64_t(inst.index()));
        if (const auto *g = std::get_if<Gate>(&inst)) {
            h.add(std::uint64_t(g->kind));
            h.add(std::uint64_t(g->operands[0] + 1));
            h.add(std::uint64_t(g->operands[1] + 1));
        } else if (const auto *m = std::get_if<Measure>(&inst)) {
            h.add(std::uint64_t(m->qubit));
            h.add(std::uint64_t(m->cbit));
        } else if (const auto *r = std::get_if<Reset>(&inst)) {
            h.add(std::uint64_t(r->qubit));
        }
    }
    return h.hex();
}

std::string fingerprint(const NoiseConfig &config) {
    Fnv1a h;
    h.add(config.id);
    for (const auto &q : config.qubits) {
        h.add(q.t1);
        h.add(q.t2);
        h.add(q.readout_error);
        h.add(q.single_gate_error);
    }
    for (const auto &[pair, p] : config.cx_error) {
        h.add(std::uint64_t(pair.first));
        h.add(std::uint64_t(pair.second));
        h.add(p);
    }
    h.add(config.default_cx_error);
    h.add(config.durations.single);
    h.add(config.durations.cx);
    h.add(config.durations.measure);
    h.add(config.durations.reset);
    return h.hex();
}

Rng shot_rng(std::uint64_t seed, std::uint64_t shot) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shot), static_cast<std::uint32_t>(shot >> 32)};
    return Rng(seq);
}

std::uint64_t run_trajectory(const Circuit &circuit, const NoiseConfig *noise, Rng &rng, const StateVector *initial) {
    check_cbits(circuit);
    StateVector state = initial_state(circuit, initial);
    const auto &ops = circuit.instructions();
    std::uint64_t record = 0;

    Schedule schedule;
    std::vector<double> free_at;
    if (noise != nullptr) {
        schedule = asap_schedule(circuit, noise->durations);
        free_at.assign(circuit.num_qubits(), 0.0);
    }

    for (std::size_t k = 0; k < ops.size(); ++k) {
        const auto &inst = ops[k];
        if (noise != nullptr && !std::holds_alternative<Barrier>(inst)) {
            for (int q : touched_qubits(inst, circuit.num_qubits())) {
                apply_idle_noise(state, q, schedule.start[k] - free_at[q], *noise, rng);
                free_at[q] = schedule.end[k];
            }
        }
        if (const auto *g = std::get_if<Gate>(&inst)) {
            state.apply(*g);
            if (noise != nullptr) {
                const double d = noise->durations.of(inst);
                for (int q : touched_qubits(inst, circuit.num_qubits())) {
                    apply_idle_noise(state, q, d, *noise, rng);
                }
                apply_gate_noise(state, *g, *noise, rng);
            }
        } else if (const auto *m = std::get_if<Measure>(&inst)) {
            if (noise != nullptr) {
                // Decay during readout happens before the outcome is fixed.
                apply_idle_noise(state, m->qubit, noise->durations.measure, *noise, rng);
            }
            int bit = state.measure_z(m->qubit, rng);
            if (noise != nullptr) {
                bit = apply_readout_noise(bit, m->qubit, *noise, rng);
            }
            record = with_bit(record, m->cbit, bit);
        } else if (const auto *r = std::get_if<Reset>(&inst)) {
            if (state.measure_z(r->qubit, rng)) {
                state.apply(Gate::single(GateKind::X, r->qubit));
            }
        }
    }
    return record;
}

ShotTable run_shots(const Circuit &circuit, long long shots, const std::optional<NoiseConfig> &noise,
                    std::uint64_t seed, unsigned threads) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1, got " + std::to_string(shots));
    }
    check_cbits(circuit);
    if (noise) {
        noise->validate();
    }
    ShotTable table;
    table.num_cbits = circuit.num_cbits();
    table.records.assign(static_cast<std::size_t>(shots), 0);
    table.metadata.seed = seed;
    table.metadata.total_shots = static_cast<std::size_t>(shots);
    table.metadata.circuit_hash = fingerprint(circuit);
    if (noise) {
        table.metadata.noise_id = noise->id;
        table.metadata.noise_hash = fingerprint(*noise);
    }

    const NoiseConfig *noise_ptr = noise ? &*noise : nullptr;
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; ++s) {
            Rng rng = shot_rng(seed, s);
            table.records[s] = run_trajectory(circuit, noise_ptr, rng);
        }
    };

    unsigned n_threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    n_threads = static_cast<unsigned>(std::min<long long>(n_threads, shots));
    if (n_threads <= 1) {
        work(0, table.records.size());
        return table;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (table.records.size() + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(table.records.size(), begin + chunk);
        if (begin < end) {
            pool.emplace_back(work, begin, end);
        }
    }
    for (auto &th : pool) {
        th.join();
    }
    return table;
}

namespace {

void enumerate_branches(const Circuit &circuit, std::size_t k, StateVector state, double prob, std::uint64_t record,
                        std::map<std::uint64_t, double> &out) {
    const auto &ops = circuit.instructions();
    for (; k < ops.size(); ++k) {
        const auto &inst = ops[k];
        if (const auto *g = std::get_if<Gate>(&inst)) {
            state.apply(*g);
        } else if (std::holds_alternative<Measure>(inst) || std::holds_alternative<Reset>(inst)) {
            const bool is_reset = std::holds_alternative<Reset>(inst);
            const int q = is_reset ? std::get<Reset>(inst).qubit : std::get<Measure>(inst).qubit;
            const double p1 = state.probability_one(q);
            const double p0 = 1.0 - p1;
            std::vector<int> branches;
            if (p0 > kImpossibleCutoff) {
                branches.push_back(0);
            }
            if (p1 > kImpossibleCutoff) {
                branches.push_back(1);
            }
            if (branches.size() == 1) {
                const int b = branches[0];
                state.collapse(q, b);
                prob *= b ? p1 : p0;
                if (is_reset) {
                    if (b) {
                        state.apply(Gate::single(GateKind::X, q));
                    }
                } else {
                    record = with_bit(record, std::get<Measure>(inst).cbit, b);
                }
                continue;
            }
            for (int b : branches) {
                StateVector branch = state;
                const double p = branch.collapse(q, b);
                std::uint64_t rec = record;
                if (is_reset) {
                    if (b) {
                        branch.apply(Gate::single(GateKind::X, q));
                    }
                } else {
                    rec = with_bit(rec, std::get<Measure>(inst).cbit, b);
                }
                enumerate_branches(circuit, k + 1, std::move(branch), prob * p, rec, out);
            }
            return;
        }
    }
    out[record] += prob;
}

}  // namespace

std::map<std::uint64_t, double> exact_distribution(const Circuit &circuit, const StateVector *initial) {
    check_cbits(circuit);
    std::map<std::uint64_t, double> out;
    enumerate_branches(circuit, 0, initial_state(circuit, initial), 1.0, 0, out);
    return out;
}

double run_forced(const Circuit &circuit, StateVector &state, std::uint64_t record) {
    if (state.num_qubits() != circuit.num_qubits()) {
        throw ShapeError("run_forced: state width does not match circuit");
    }
    double prob = 1.0;
    for (const auto &inst : circuit.instructions()) {
        if (const auto *g = std::get_if<Gate>(&inst)) {
            state.apply(*g);
        } else if (const auto *m = std::get_if<Measure>(&inst)) {
            const int b = ShotTable::bit(record, m->cbit);
            const double p1 = state.probability_one(m->qubit);
            const double p = b ? p1 : 1.0 - p1;
            if (p <= kImpossibleCutoff) {
                return 0.0;
            }
            state.collapse(m->qubit, b);
            prob *= p;
        } else if (const auto *r = std::get_if<Reset>(&inst)) {
            const double p1 = state.probability_one(r->qubit);
            if (p1 > kImpossibleCutoff && 1.0 - p1 > kImpossibleCutoff) {
                throw std::logic_error("run_forced: reset of a qubit not in a Z eigenstate");
            }
            if (p1 > 0.5) {
                state.apply(Gate::single(GateKind::X, r->qubit));
            }
        }
    }
    return prob;
}

namespace {

void project_branches(const std::vector<PauliOperator> &sequence, std::size_t k, const StateVector &state,
                      double prob, std::uint64_t record, std::map<std::uint64_t, double> &out) {
    if (k == sequence.size()) {
        out[record] += prob;
        return;
    }
    for (int b : {0, 1}) {
        const double p = state.projector_probability(sequence[k], b);
        if (p <= kImpossibleCutoff) {
            continue;
        }
        StateVector branch = state;
        branch.project(sequence[k], b);
        project_branches(sequence, k + 1, branch, prob * p, with_bit(record, static_cast<int>(k), b), out);
    }
}

}  // namespace

std::map<std::uint64_t, double> projective_distribution(const StateVector &initial,
                                                        const std::vector<PauliOperator> &sequence) {
    if (sequence.size() > 64) {
        throw CapacityError("at most 64 measurements per record");
    }
    std::map<std::uint64_t, double> out;
    project_branches(sequence, 0, initial, 1.0, 0, out);
    return out;
}

double total_variation(const std::map<std::uint64_t, double> &a, const std::map<std::uint64_t, double> &b) {
    double sum = 0.0;
    for (const auto &[k, p] : a) {
        auto it = b.find(k);
        sum += std::abs(p - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto &[k, p] : b) {
        if (!a.count(k)) {
            sum += std::abs(p);
        }
    }
    return 0.5 * sum;
}

}  // namespace majex
