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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "majex/circuit_text.hpp"
#include "majex/cli.hpp"
#include "majex/compile.hpp"
#include "majex/errors.hpp"
#include "majex/exchange.hpp"
#include "majex/lattice.hpp"
#include "majex/parity.hpp"
#include "majex/pipeline.hpp"
#include "majex/simulate.hpp"
#include "oracle.hpp"
#include "schema_check.hpp"

using namespace majex;
using nlohmann::json;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double binomial_se(double p, double n) {
    return std::sqrt(p * (1 - p) / n);
}

// (v1, v3) distribution of accepted records from the dense oracle, with
// the ideal layout's classical bits: 0 YY, 1 XX, 2 Z(v2), 3 v1, 4 v3.
std::array<double, 5> oracle_readout(ReadoutSetting setting) {
    std::array<double, 5> p{};  // p[0..3] over 2*v1+v3, p[4] acceptance
    for (const auto &[r, w] : oracle::distribution(ideal_circuit(ExperimentDef{}, setting), oracle::zero_state(5))) {
        if ((r & 7) == 0) {
            p[2 * ((r >> 3) & 1) + ((r >> 4) & 1)] += w;
            p[4] += w;
        }
    }
    for (int k = 0; k < 4; ++k) {
        p[k] /= p[4];
    }
    return p;
}

Verdict criterion1() {
    Verdict v;
    RunOptions o;
    o.shots = 24576;
    o.seed = 7;
    const ExchangeRun r = run_exchange(ReadoutSetting::Z, o);
    const CorrelationResult c = correlation(r.kept, r.def);
    const double se = std::sqrt((1 - c.c * c.c) / c.retained);
    v.check(std::abs(c.c - 1) <= 3 * se, fmt("C=%.6f se=%.2e", c.c, se));
    const auto p = oracle_readout(ReadoutSetting::Z);
    const double exact = p[0] + p[3] - p[1] - p[2];
    v.check(std::abs(exact - 1) < 1e-12, fmt("oracle C=%.15f", exact));
    v.detail = v.pass ? fmt("C=%.6f over %.0f retained; oracle C=%.12f", c.c, double(c.retained), exact) : v.detail;
    return v;
}

Verdict criterion2() {
    Verdict v;
    RunOptions o;
    o.shots = 24576;
    o.seed = 7;
    const ExchangeRun r = run_exchange(ReadoutSetting::Z, o);
    const double rate = double(r.kept.size()) / double(o.shots);
    const double se = binomial_se(0.125, double(o.shots));
    v.check(std::abs(rate - 0.125) <= 3 * se, fmt("rate=%.5f se=%.2e", rate, se));
    const double exact = oracle_readout(ReadoutSetting::Z)[4];
    v.check(std::abs(exact - 0.125) < 1e-12, fmt("oracle acceptance=%.15f", exact));
    if (v.pass) {
        v.detail = fmt("acceptance %.5f (3 sigma %.5f); oracle %.12f", rate, 3 * se, exact);
    }
    return v;
}

Verdict criterion3() {
    Verdict v;
    Rng rng(2016);
    double worst = 1.0;
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector data = random_state(2, rng);
        const oracle::Vec dv = oracle::to_vec(data);
        for (ParityBasis basis : {ParityBasis::XX, ParityBasis::YY, ParityBasis::ZZ}) {
            const Circuit c = parity_circuit({basis, {0, 1}, 2, 0}, 3, 1);
            const oracle::Mat P = oracle::pauli(std::string(2, pauli_letter(basis)));
            for (int b : {0, 1}) {
                const oracle::Vec want = 0.5 * (oracle::Mat::Identity(4, 4) + (b ? -1.0 : 1.0) * P) * dv;
                StateVector s = embed(data, 3, std::vector<int>{0, 1});
                const double p = run_forced(c, s, b);
                v.check(std::abs(p - want.squaredNorm()) < 1e-9, "outcome probability mismatch");
                if (want.squaredNorm() > 1e-9) {
                    worst = std::min(worst, oracle::fidelity(oracle::to_vec(s), oracle::kron(oracle::zero_state(1), want)));
                }
            }
        }
    }
    v.check(worst > 1 - 1e-9, fmt("min fidelity %.3e below 1-1e-9", worst));
    if (v.pass) {
        v.detail = fmt("min fidelity 1 - %.2e over 20 states x 3 bases x 2 outcomes", 1 - worst);
    }
    return v;
}

Verdict criterion4() {
    Verdict v;
    // |000> has ZZ = +1 (outcome 0) on (0, 1). Measure XX on (1, 2), then ZZ again.
    // Edges (0, 1) and (1, 2) share vertex 1, so XX anticommutes with ZZ.
    Circuit c(4, 3);
    c.append(parity_circuit({ParityBasis::ZZ, {0, 1}, 3, 0}, 4, 3));
    c.append(parity_circuit({ParityBasis::XX, {1, 2}, 3, 1}, 4, 3));
    c.append(parity_circuit({ParityBasis::ZZ, {0, 1}, 3, 2}, 4, 3));
    const int n = 20000;
    const ShotTable t = run_shots(c, n, std::nullopt, 4);
    int first_zero = 0, ones = 0;
    for (auto r : t.records) {
        first_zero += ShotTable::bit(r, 0) == 0;
        ones += ShotTable::bit(r, 2);
    }
    v.check(first_zero == n, "initial ZZ not deterministic 0");
    const double f = double(ones) / n;
    const double se = binomial_se(0.5, n);
    v.check(std::abs(f - 0.5) <= 3 * se, fmt("P(1)=%.4f se=%.4f", f, se));
    if (v.pass) {
        v.detail = fmt("re-measured ZZ gives 1 with frequency %.4f (3 sigma %.4f)", f, 3 * se);
    }
    return v;
}

Verdict criterion5() {
    Verdict v;
    const DeviceModel d = load_device(MAJEX_DATA_DIR "/device_synthetic.json");
    const QubitAssignment a = assign_qubits(d);
    const ExperimentDef dev = a.experiment();
    double worst = 0.0;
    for (ReadoutSetting s : {ReadoutSetting::Z, ReadoutSetting::X, ReadoutSetting::Y_YZY, ReadoutSetting::Y_XZX}) {
        const Circuit ideal = ideal_circuit(ExperimentDef{}, s);
        const Circuit compiled = compile(ideal, d, a);
        // Post-selected (v1, v3) distributions from the dense oracle.
        std::array<double, 4> pi{}, pc{};
        double ai = 0, ac = 0;
        for (const auto &[r, w] : oracle::distribution(ideal, oracle::zero_state(5))) {
            const ExchangeOutcome o = decode(ExperimentDef{}, r);
            if (!o.yy && !o.xx && !o.z2) {
                pi[2 * o.v1 + o.v3] += w;
                ai += w;
            }
        }
        for (const auto &[r, w] : oracle::distribution(compiled, oracle::zero_state(5))) {
            const ExchangeOutcome o = decode(dev, r);
            if (!o.yy && !o.xx && !o.z2) {
                pc[2 * o.v1 + o.v3] += w;
                ac += w;
            }
        }
        double tv = 0;
        for (int k = 0; k < 4; ++k) {
            tv += 0.5 * std::abs(pi[k] / ai - pc[k] / ac);
        }
        worst = std::max(worst, tv);
        for (const Gate &g : compiled.cnots()) {
            v.check(g.target() == *d.hub() && d.allows(g.control(), g.target()), "CNOT off the hub");
        }
        // Shot by shot: e1 carries YY, e1 xor e12 carries XX, and the
        // decoded tuple is one the ideal circuit produces.
        const auto ideal_dist = exact_distribution(ideal);
        const ShotTable t = run_shots(compiled, 2000, std::nullopt, 21);
        for (auto r : t.records) {
            const int e12 = ShotTable::bit(r, 0), e1 = ShotTable::bit(r, 1);
            const ExchangeOutcome o = decode(dev, r);
            const std::uint64_t as_ideal = std::uint64_t(o.yy) | std::uint64_t(o.xx) << 1 |
                                           std::uint64_t(o.z2) << 2 | std::uint64_t(o.v1) << 3 |
                                           std::uint64_t(o.v3) << 4;
            if (o.yy != e1 || o.xx != (e1 ^ e12) || !ideal_dist.count(as_ideal)) {
                v.check(false, "bit inference identity broken");
                break;
            }
        }
    }
    v.check(worst < 1e-9, fmt("TV %.3e", worst));
    if (v.pass) {
        v.detail = fmt("max TV %.2e over 4 settings; all CNOTs target hub Q%.0f; 8000 shots decoded", worst,
                       double(*d.hub()));
    }
    return v;
}

Verdict criterion6() {
    Verdict v;
    const Lattice lat = Lattice::build(2, 1);
    const auto edges = find_exchange_edges(lat);
    if (!edges) {
        v.check(false, "no exchange site on the 2x1 lattice");
        return v;
    }
    const ExchangeSchedule s = exchange_schedule(lat, edges->first, edges->second);
    const ReadoutDistribution full = schedule_distribution(lat, s);
    const ExperimentDef def = experiment_from(truncate(s));
    const ReadoutDistribution cut = circuit_distribution(ideal_circuit(def), def);
    const double tv = total_variation(full, cut);
    v.check(tv < 1e-9, fmt("TV %.3e", tv));
    if (v.pass) {
        v.detail = fmt("%.0f-qubit lattice vs 5-qubit truncation: TV %.2e", double(lat.num_vertices()), tv);
    }
    return v;
}

Verdict criterion7() {
    Verdict v;
    RunOptions o;
    o.shots = 8192;
    o.seed = 8192;
    const TomographyRun t = run_tomography(o);
    const auto &b = t.result.bloch;
    const auto &se = t.result.bloch_stderr;
    // A setting with a deterministic outcome has zero sample spread; use the
    // binomial bound at p = 1/2 for the zero-mean components instead.
    const double sx = std::max(se[0], 1 / std::sqrt(double(t.estimates[0].shots)));
    const double sz = std::max(se[2], 1 / std::sqrt(double(t.estimates[2].shots)));
    v.check(std::abs(b[1]) >= 1 - 3 * se[1], fmt("|y|=%.5f se=%.2e", std::abs(b[1]), se[1]));
    v.check(std::abs(b[0]) <= 3 * sx, fmt("|x|=%.5f", std::abs(b[0])));
    v.check(std::abs(b[2]) <= 3 * sz, fmt("|z|=%.5f", std::abs(b[2])));

    // Analytic: exact expectations from the dense oracle.
    const auto px = oracle_readout(ReadoutSetting::X), py = oracle_readout(ReadoutSetting::Y_YZY),
               pz = oracle_readout(ReadoutSetting::Z);
    const double x = px[0] + px[3] - px[1] - px[2];
    const double y = py[0] + py[3] - py[1] - py[2];
    const double z = pz[0] + pz[1] - pz[2] - pz[3];
    const TomographyResult exact = reconstruct(x, y, z);
    v.check(exact.fidelity >= 0.999, fmt("analytic fidelity %.6f", exact.fidelity));

    // Substitute property for the hardware numbers: the shipped synthetic
    // configuration lands in the plausibility band.
    const DeviceModel d = load_device(MAJEX_DATA_DIR "/device_synthetic.json");
    RunOptions n;
    n.shots = 24576;
    n.seed = 7;
    n.noise = noise_from_device(d);
    n.device = d;
    n.compiled = true;
    const ExchangeRun r = run_exchange(ReadoutSetting::Z, n);
    const double c = correlation(r.kept, r.def).c;
    v.check(c >= 0.35 && c <= 0.60, fmt("synthetic-device C=%.4f outside [0.35, 0.60]", c));
    if (v.pass) {
        v.detail = fmt("bloch (%.4f, %.4f, %.4f)", b[0], b[1], b[2]) +
                   fmt("; analytic fidelity %.6f; synthetic-device C=%.4f", exact.fidelity, c) +
                   " (hardware C=0.530 and fidelities are context only)";
    }
    return v;
}

Verdict criterion8() {
    Verdict v;
    int lattices = 0, schedules = 0, pairs = 0;
    for (int rows = 1; rows <= 4; ++rows) {
        for (int cols = 1; cols <= 4; ++cols) {
            const Lattice lat = Lattice::build(rows, cols);
            ++lattices;
            auto commuting = [&](const std::vector<Generator> &g) {
                for (std::size_t i = 0; i < g.size(); ++i) {
                    for (std::size_t j = i + 1; j < g.size(); ++j) {
                        ++pairs;
                        if (!g[i].op.commutes(g[j].op)) {
                            return false;
                        }
                    }
                }
                return true;
            };
            v.check(commuting(standard_stabilizers(lat).generators),
                    "standard generators anticommute on " + std::to_string(rows) + "x" + std::to_string(cols));
            for (std::size_t a = 0; a < lat.edges().size(); ++a) {
                for (std::size_t b = 0; b < lat.edges().size(); ++b) {
                    ExchangeSchedule s;
                    try {
                        s = exchange_schedule(lat, int(a), int(b));
                    } catch (const TopologyError &) {
                        continue;
                    }
                    ++schedules;
                    for (std::size_t k = 0; k <= s.steps.size(); ++k) {
                        v.check(commuting(s.generators_after(k)), "step breaks commutation");
                    }
                    v.check(commuting(s.final_generators()), "readout breaks commutation");
                }
            }
        }
    }
    if (v.pass) {
        v.detail = "lattices 1x1..4x4: " + std::to_string(lattices) + " lattices, " + std::to_string(schedules) +
                   " exchange schedules, " + std::to_string(pairs) + " commutation checks";
    }
    return v;
}

Verdict criterion9() {
    Verdict v;
    Rng rng(99);
    std::vector<std::string> misses;
    auto add = [&](const std::vector<std::string> &m) { misses.insert(misses.end(), m.begin(), m.end()); };
    {
        NoiseConfig c;
        c.qubits.assign(2, QubitNoise{1.0, 1.3, 0.0, 0.0});
        const StateVector in1 = random_state(1, rng);
        add(oracle::channel_mismatches(in1, oracle::idle_channel(oracle::density(in1), 0, 1, 0.6, 1.0, 1.3),
                                       [&](StateVector &s, Rng &r) { apply_idle_noise(s, 0, 0.6, c, r); }, 100000,
                                       1));
        const StateVector in2 = random_state(2, rng);
        add(oracle::channel_mismatches(in2, oracle::idle_channel(oracle::density(in2), 1, 2, 0.3, 1.0, 1.3),
                                       [&](StateVector &s, Rng &r) { apply_idle_noise(s, 1, 0.3, c, r); }, 100000,
                                       2));
    }
    {
        const double p = 0.25;
        const NoiseConfig c = NoiseConfig::depolarizing(2, p);
        const StateVector in = random_state(2, rng);
        const oracle::Mat u = oracle::cnot(1, 0, 2);
        const oracle::Mat rho = u * oracle::density(in) * u.adjoint();
        oracle::Mat out = (1 - p) * rho;
        for (const auto &label : oracle::all_paulis(2)) {
            if (label != "II") {
                const oracle::Mat P = oracle::pauli(label);
                out += p / 15 * P * rho * P;
            }
        }
        add(oracle::channel_mismatches(in, out,
                                       [&](StateVector &s, Rng &r) {
                                           s.apply(Gate::cx(1, 0));
                                           apply_gate_noise(s, Gate::cx(1, 0), c, r);
                                       },
                                       100000, 3));
    }
    for (const auto &m : misses) {
        v.check(false, "channel " + m);
    }

    // C(p) on p = 0, 0.01, ..., 0.1 with 1e5 shots per point.
    std::vector<double> cs, ses;
    for (int k = 0; k <= 10; ++k) {
        RunOptions o;
        o.shots = 100000;
        o.seed = 1000 + k;
        o.noise = NoiseConfig::depolarizing(5, 0.01 * k);
        const ExchangeRun r = run_exchange(ReadoutSetting::Z, o);
        const CorrelationResult c = correlation(r.kept, r.def);
        cs.push_back(c.c);
        ses.push_back(c.stderr_c);
    }
    for (std::size_t k = 1; k < cs.size(); ++k) {
        v.check(cs[k] <= cs[k - 1] + 3 * std::hypot(ses[k], ses[k - 1]),
                fmt("C rises from %.4f to %.4f at p=%.2f", cs[k - 1], cs[k], 0.01 * k));
    }
    if (v.pass) {
        std::ostringstream s;
        s << "3 channels x 1e5 trajectories within 3 sigma; C(p):";
        for (double c : cs) {
            s << " " << std::round(c * 1000) / 1000;
        }
        v.detail = s.str();
    }
    return v;
}

std::string run_cli(const std::vector<std::string> &args, int &code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

Verdict criterion10() {
    Verdict v;
    int fixtures = 0;
    for (const auto &e : std::filesystem::directory_iterator(MAJEX_FIXTURE_DIR)) {
        if (e.path().extension() != ".circuit") {
            continue;
        }
        ++fixtures;
        const Circuit c = load_circuit(e.path().string());
        const std::string printed = print_circuit(c);
        v.check(parse_circuit(printed) == c && print_circuit(parse_circuit(printed)) == printed,
                "round trip " + e.path().filename().string());
    }
    v.check(fixtures > 0, "no fixtures");

    std::ifstream in(MAJEX_SCHEMA_DIR "/run_report.schema.json");
    const json schema = json::parse(in);
    const std::string dev = MAJEX_DATA_DIR "/device_synthetic.json";
    const std::vector<std::vector<std::string>> runs = {
        {"run", "--experiment", "exchange", "--shots", "4000", "--seed", "7"},
        {"run", "--experiment", "tomography", "--shots", "2000", "--seed", "7"},
        {"run", "--shots", "4000", "--seed", "7", "--noise", dev, "--device", dev, "--compiled"},
    };
    for (const auto &args : runs) {
        int c1 = 0, c2 = 0;
        const std::string a = run_cli(args, c1);
        const std::string b = run_cli(args, c2);
        v.check(c1 == 0, "exit code " + std::to_string(c1));
        v.check(a == b, "non-deterministic output");
        for (const auto &e : schema_check::validate(json::parse(a), schema)) {
            v.check(false, "schema " + e);
        }
    }
    if (v.pass) {
        v.detail = std::to_string(fixtures) + " fixtures round-trip; 3 reports schema-valid and reproducible";
    }
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        double budget_s;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {"noiseless correlation", 10, criterion1},   {"post-selection rate", 10, criterion2},
        {"parity-projector equivalence", 5, criterion3}, {"non-commuting disturbance", 5, criterion4},
        {"compilation soundness", 5, criterion5},   {"truncation faithfulness", 60, criterion6},
        {"tomography", 60, criterion7},              {"stabilizer algebra", 5, criterion8},
        {"noise-model sanity", 120, criterion9},     {"cli", 60, criterion10},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[k].run();
        } catch (const std::exception &e) {
            v.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        v.check(secs <= criteria[k].budget_s, fmt("took %.1f s, budget %.0f s", secs, criteria[k].budget_s));
        failed += !v.pass;
        std::printf("[%s] %2zu %-30s %6.2fs  %s\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].name, secs,
                    v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
