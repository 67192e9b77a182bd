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

#include "majex/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "majex/circuit_text.hpp"
#include "majex/errors.hpp"
#include "majex/pipeline.hpp"
#include "majex/report.hpp"

namespace majex::cli {
namespace {

const std::map<std::string, ReadoutSetting> kSettingNames = {{"Z", ReadoutSetting::Z},
                                                             {"X", ReadoutSetting::X},
                                                             {"Y_YZY", ReadoutSetting::Y_YZY},
                                                             {"Y_XZX", ReadoutSetting::Y_XZX}};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Emitter {
    std::ostream &out;
    std::string path;

    void emit(const std::string &text) const {
        out << text;
        if (!path.empty()) {
            std::ofstream f(path);
            if (!f) {
                throw std::runtime_error("cannot write " + path);
            }
            f << text;
        }
    }
};

struct RunArgs {
    std::string experiment = "exchange";
    long long shots = 24576;
    std::uint64_t seed = 0;
    std::string noise;
    std::string device;
    bool compiled = false;
    std::string out;
    std::string format = "json";
    unsigned threads = 0;
};

struct CompileArgs {
    std::string device;
    std::string assign = "auto";
    std::string setting = "Z";
    std::string out;
};

struct ExportArgs {
    std::string setting = "Z";
    std::string out;
};

struct LatticeArgs {
    int rows = 2;
    int cols = 2;
    std::vector<int> edges;
    bool exchange = false;
    std::string out;
};

struct SampleArgs {
    std::string circuit;
    long long shots = 1024;
    std::uint64_t seed = 0;
    std::string noise;
    std::string format = "json";
    std::string out;
    unsigned threads = 0;
};

QubitAssignment parse_assignment(const std::string &text) {
    QubitAssignment a;
    std::stringstream ss(text);
    std::string item;
    int k = 0;
    while (std::getline(ss, item, ',')) {
        if (k >= 5) {
            throw UsageError("--assign takes five comma-separated qubits (v1,v2,v3,e1,e12)");
        }
        try {
            std::size_t used = 0;
            a.physical[k] = std::stoi(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::logic_error &) {
            throw UsageError("--assign: '" + item + "' is not a qubit index");
        }
        ++k;
    }
    if (k != 5) {
        throw UsageError("--assign takes five comma-separated qubits (v1,v2,v3,e1,e12)");
    }
    return a;
}

Json run_metadata(const ShotTable &raw, const RunOptions &opts) {
    Json m = to_json(raw.metadata);
    m["seed"] = opts.seed;  // tomography settings use seed + k, listed per setting
    if (opts.device) {
        m["device"] = opts.device->name;
        m["device_synthetic"] = opts.device->synthetic;
    }
    return m;
}

int cmd_run(const RunArgs &a, std::ostream &out) {
    RunOptions opts;
    opts.shots = a.shots;
    opts.seed = a.seed;
    opts.threads = a.threads;
    opts.compiled = a.compiled;
    if (a.compiled && a.device.empty()) {
        throw UsageError("--compiled needs --device FILE");
    }
    if (!a.device.empty()) {
        opts.device = load_device(a.device);
    }
    if (!a.noise.empty()) {
        opts.noise = noise_from_device(load_device(a.noise));
    }
    const Emitter em{out, a.out};

    Json report{{"experiment", a.experiment}, {"shots", a.shots}};
    std::vector<ExchangeRun> runs;
    std::optional<TomographyRun> tomo;
    try {
        if (a.experiment == "tomography") {
            tomo = run_tomography(opts);
            runs.assign(tomo->runs.begin(), tomo->runs.end());
        } else {
            runs.push_back(run_exchange(ReadoutSetting::Z, opts));
        }
    } catch (const UndefinedStatisticError &e) {
        em.emit(Json{{"error", "undefined_statistic"}, {"message", e.what()}, {"shots", a.shots}, {"retained", 0}}
                    .dump(2) +
                "\n");
        return kExitUndefinedStatistic;
    }

    if (a.format == "csv") {
        std::ostringstream csv;
        if (tomo) {
            bool header = true;
            for (const auto &r : runs) {
                std::istringstream rows(to_csv(r.raw));
                std::string line;
                std::getline(rows, line);
                if (header) {
                    csv << "setting," << line << "\n";
                    header = false;
                }
                while (std::getline(rows, line)) {
                    csv << name(r.setting) << "," << line << "\n";
                }
            }
        } else {
            csv << to_csv(runs.front().raw);
        }
        em.emit(csv.str());
        return kExitOk;
    }

    const ExchangeRun &zrun = runs.back();  // the Z setting in both modes
    if (zrun.kept.records.empty()) {
        em.emit(Json{{"error", "undefined_statistic"},
                     {"message", "correlation C is undefined over zero retained shots"},
                     {"shots", a.shots},
                     {"retained", 0}}
                    .dump(2) +
                "\n");
        return kExitUndefinedStatistic;
    }
    const CorrelationResult c = correlation(zrun.kept, zrun.def);
    report["retained"] = c.retained;
    report["acceptance"] = static_cast<double>(c.retained) / static_cast<double>(a.shots);
    report["C"] = c.c;
    report["stderr_C"] = c.stderr_c;
    report["outcome_counts"] = to_json(c)["outcome_counts"];
    report["compiled"] = a.compiled;
    if (zrun.assignment) {
        report["assignment"] = to_json(*zrun.assignment);
    }
    if (tomo) {
        Json settings = Json::array();
        for (int k = 0; k < 3; ++k) {
            settings.push_back({{"setting", std::string(name(tomo->runs[k].setting))},
                                {"shots", a.shots},
                                {"seed", tomo->runs[k].raw.metadata.seed},
                                {"retained", tomo->runs[k].kept.size()},
                                {"value", tomo->estimates[k].value},
                                {"stderr", tomo->estimates[k].stderr_value}});
        }
        report["settings"] = std::move(settings);
        report["tomography"] = to_json(tomo->result);
    }
    report["metadata"] = run_metadata(zrun.raw, opts);
    em.emit(report.dump(2) + "\n");
    return kExitOk;
}

int cmd_compile(const CompileArgs &a, std::ostream &out) {
    const DeviceModel device = load_device(a.device);
    QubitAssignment assignment = a.assign == "auto" ? assign_qubits(device) : parse_assignment(a.assign);
    assignment.score = assignment_cost(device, assignment);
    const Circuit compiled = compile(ideal_circuit(ExperimentDef{}, kSettingNames.at(a.setting)), device, assignment);
    Json header{{"device", device.name},
                {"synthetic", device.synthetic},
                {"setting", a.setting},
                {"assignment", to_json(assignment)},
                {"circuit_hash", fingerprint(compiled)}};
    Emitter{out, a.out}.emit("# " + header.dump() + "\n" + print_circuit(compiled));
    return kExitOk;
}

int cmd_export(const ExportArgs &a, std::ostream &out) {
    Emitter{out, a.out}.emit(print_circuit(ideal_circuit(ExperimentDef{}, kSettingNames.at(a.setting))));
    return kExitOk;
}

int cmd_lattice(const LatticeArgs &a, std::ostream &out) {
    const Lattice lat = Lattice::build(a.rows, a.cols);
    Json j{{"lattice", to_json(lat)}};
    Json gens = Json::array();
    for (const auto &g : standard_stabilizers(lat).generators) {
        gens.push_back(to_json(g));
    }
    j["stabilizers"] = std::move(gens);
    if (a.exchange || !a.edges.empty()) {
        std::pair<int, int> edges;
        if (!a.edges.empty()) {
            if (a.edges.size() != 2) {
                throw UsageError("--edges takes two blue edge ids");
            }
            edges = {a.edges[0], a.edges[1]};
        } else {
            const auto found = find_exchange_edges(lat);
            if (!found) {
                throw TopologyError("lattice has no exchange site");
            }
            edges = *found;
        }
        const ExchangeSchedule s = exchange_schedule(lat, edges.first, edges.second);
        const Support sup = support(s);
        j["schedule"] = to_json(s);
        j["support"] = {{"vertices", sup.vertices}, {"edges", sup.edges}};
        j["truncated"] = to_json(truncate(s));
    }
    Emitter{out, a.out}.emit(j.dump(2) + "\n");
    return kExitOk;
}

int cmd_sample(const SampleArgs &a, std::ostream &out) {
    const Circuit c = load_circuit(a.circuit);
    std::optional<NoiseConfig> noise;
    if (!a.noise.empty()) {
        noise = noise_from_device(load_device(a.noise));
    }
    const ShotTable t = run_shots(c, a.shots, noise, a.seed, a.threads);
    Emitter{out, a.out}.emit(a.format == "csv" ? to_csv(t) : to_json(t).dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Majorana-exchange experiment simulator", "majex"};
    app.require_subcommand(1);
    std::vector<std::string> settings;
    for (const auto &[k, v] : kSettingNames) {
        settings.push_back(k);
    }

    RunArgs ra;
    auto *run_cmd = app.add_subcommand("run", "Sample the exchange or tomography experiment");
    run_cmd->add_option("--experiment", ra.experiment, "exchange | tomography")
        ->check(CLI::IsMember({"exchange", "tomography"}));
    run_cmd->add_option("--shots", ra.shots, "Shots (per setting for tomography)")->check(CLI::PositiveNumber);
    run_cmd->add_option("--seed", ra.seed, "RNG seed");
    run_cmd->add_option("--noise", ra.noise, "Noise file (device format)");
    run_cmd->add_option("--device", ra.device, "Device file");
    run_cmd->add_flag("--compiled", ra.compiled, "Run the device-compiled circuit");
    run_cmd->add_option("--out", ra.out, "Also write the output to FILE");
    run_cmd->add_option("--format", ra.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    run_cmd->add_option("--threads", ra.threads, "Worker threads (0 = all cores)");

    CompileArgs ca;
    auto *compile_cmd = app.add_subcommand("compile", "Compile the exchange circuit for a device");
    compile_cmd->add_option("--device", ca.device, "Device file")->required();
    compile_cmd->add_option("--assign", ca.assign, "auto, or v1,v2,v3,e1,e12 physical qubits");
    compile_cmd->add_option("--setting", ca.setting, "Readout setting")->check(CLI::IsMember(settings));
    compile_cmd->add_option("--out", ca.out, "Also write the output to FILE");

    ExportArgs ea;
    auto *export_cmd = app.add_subcommand("export", "Print the ideal exchange circuit");
    export_cmd->add_option("--setting", ea.setting, "Readout setting")->check(CLI::IsMember(settings));
    export_cmd->add_option("--out", ea.out, "Also write the output to FILE");

    LatticeArgs la;
    auto *lattice_cmd = app.add_subcommand("lattice", "Describe a lattice, its stabilizers and an exchange");
    lattice_cmd->add_option("--rows", la.rows, "Hexagon rows")->check(CLI::PositiveNumber);
    lattice_cmd->add_option("--cols", la.cols, "Hexagon columns")->check(CLI::PositiveNumber);
    lattice_cmd->add_option("--edges", la.edges, "Blue edge ids zz_a zz_b")->expected(2)->delimiter(',');
    lattice_cmd->add_flag("--exchange", la.exchange, "Include the first exchange schedule found");
    lattice_cmd->add_option("--out", la.out, "Also write the output to FILE");

    SampleArgs sa;
    auto *sample_cmd = app.add_subcommand("sample", "Sample a circuit file");
    sample_cmd->add_option("--circuit", sa.circuit, "Circuit text file")->required();
    sample_cmd->add_option("--shots", sa.shots, "Shots")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", sa.seed, "RNG seed");
    sample_cmd->add_option("--noise", sa.noise, "Noise file (device format)");
    sample_cmd->add_option("--format", sa.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sample_cmd->add_option("--out", sa.out, "Also write the output to FILE");
    sample_cmd->add_option("--threads", sa.threads, "Worker threads (0 = all cores)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed()) {
            return cmd_run(ra, out);
        }
        if (compile_cmd->parsed()) {
            return cmd_compile(ca, out);
        }
        if (export_cmd->parsed()) {
            return cmd_export(ea, out);
        }
        if (lattice_cmd->parsed()) {
            return cmd_lattice(la, out);
        }
        return cmd_sample(sa, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UndefinedStatisticError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUndefinedStatistic;
    } catch (const RoutingError &e) {
        err << "routing error: " << e.what() << "\n";
        return kExitRouting;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace majex::cli
