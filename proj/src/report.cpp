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

#include "majex/report.hpp"

#include <sstream>

#include "majex/errors.hpp"

namespace majex {

Json to_json(const ShotMetadata &meta) {
    return Json{{"seed", meta.seed},
                {"rng", meta.rng},
                {"noise_id", meta.noise_id},
                {"noise_hash", meta.noise_hash},
                {"circuit_hash", meta.circuit_hash},
                {"total_shots", meta.total_shots},
                {"postselected", meta.postselected}};
}

Json to_json(const ShotTable &table) {
    Json records = Json::array();
    for (std::uint64_t r : table.records) {
        records.push_back(record_string(r, table.num_cbits));
    }
    return Json{{"num_cbits", table.num_cbits},
                {"shots", table.records.size()},
                {"metadata", to_json(table.metadata)},
                {"records", std::move(records)}};
}

ShotTable shot_table_from_json(const Json &j) {
    ShotTable t;
    t.num_cbits = j.at("num_cbits").get<int>();
    const Json &m = j.at("metadata");
    t.metadata.seed = m.at("seed").get<std::uint64_t>();
    t.metadata.rng = m.at("rng").get<std::string>();
    t.metadata.noise_id = m.at("noise_id").get<std::string>();
    t.metadata.noise_hash = m.at("noise_hash").get<std::string>();
    t.metadata.circuit_hash = m.at("circuit_hash").get<std::string>();
    t.metadata.total_shots = m.at("total_shots").get<std::size_t>();
    t.metadata.postselected = m.at("postselected").get<bool>();
    for (const auto &r : j.at("records")) {
        const std::string s = r.get<std::string>();
        if (static_cast<int>(s.size()) != t.num_cbits) {
            throw ValidationError("record '" + s + "' does not have num_cbits characters");
        }
        std::uint64_t rec = 0;
        for (int k = 0; k < t.num_cbits; ++k) {
            if (s[k] == '1') {
                rec |= std::uint64_t{1} << k;
            } else if (s[k] != '0') {
                throw ValidationError("record '" + s + "' is not a bitstring");
            }
        }
        t.records.push_back(rec);
    }
    return t;
}

std::string to_csv(const ShotTable &table) {
    std::ostringstream out;
    out << "shot";
    for (int k = 0; k < table.num_cbits; ++k) {
        out << ",c" << k;
    }
    out << "\n";
    for (std::size_t s = 0; s < table.records.size(); ++s) {
        out << s;
        for (int k = 0; k < table.num_cbits; ++k) {
            out << "," << ShotTable::bit(table.records[s], k);
        }
        out << "\n";
    }
    return out.str();
}

Json to_json(const CorrelationResult &c) {
    return Json{{"C", c.c},
                {"stderr_C", c.stderr_c},
                {"retained", c.retained},
                {"outcome_counts", {{"00", c.counts[0]}, {"01", c.counts[1]}, {"10", c.counts[2]}, {"11", c.counts[3]}}}};
}

Json to_json(const TomographyResult &t) {
    Json density = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 2; ++c) {
            const cplx v = t.density[2 * r + c];
            row.push_back({v.real(), v.imag()});
        }
        density.push_back(std::move(row));
    }
    return Json{{"bloch", {t.bloch[0], t.bloch[1], t.bloch[2]}},
                {"bloch_stderr", {t.bloch_stderr[0], t.bloch_stderr[1], t.bloch_stderr[2]}},
                {"density", std::move(density)},
                {"target", kExchangeLogicalYSign > 0 ? "+i" : "-i"},
                {"fidelity", t.fidelity},
                {"closest_pure", t.closest_pure}};
}

Json to_json(const QubitAssignment &a) {
    Json roles = Json::object();
    for (Role r : kRoles) {
        roles[std::string(name(r))] = a.of(r);
    }
    return Json{{"roles", std::move(roles)}, {"score", a.score}};
}

Json to_json(const Lattice &lattice) {
    Json vertices = Json::array();
    for (std::size_t v = 0; v < lattice.vertices().size(); ++v) {
        vertices.push_back({{"id", v}, {"row", lattice.vertices()[v].row}, {"col", lattice.vertices()[v].col}});
    }
    Json edges = Json::array();
    for (std::size_t e = 0; e < lattice.edges().size(); ++e) {
        const Edge &ed = lattice.edges()[e];
        edges.push_back({{"id", e}, {"a", ed.a}, {"b", ed.b}, {"color", std::string(name(ed.color))},
                         {"check", std::string(2, pauli_letter(ed.color))}});
    }
    Json hexagons = Json::array();
    for (std::size_t h = 0; h < lattice.hexagons().size(); ++h) {
        const Hexagon &hx = lattice.hexagons()[h];
        hexagons.push_back({{"id", h},
                            {"row", hx.row},
                            {"col", hx.col},
                            {"vertices", hx.vertices},
                            {"edges", hx.edges},
                            {"operator", lattice.hexagon_operator(h).str()}});
    }
    return Json{{"rows", lattice.rows()},
                {"cols", lattice.cols()},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)},
                {"hexagons", std::move(hexagons)}};
}

Json to_json(const Generator &g) {
    return Json{{"label", g.label.str()}, {"operator", g.op.str()}};
}

namespace {

Json generator_list(const std::vector<Generator> &gens) {
    Json out = Json::array();
    for (const auto &g : gens) {
        out.push_back(to_json(g));
    }
    return out;
}

}  // namespace

Json to_json(const ExchangeSchedule &schedule) {
    Json steps = Json::array();
    for (const auto &s : schedule.steps) {
        Json step{{"add", to_json(s.added)}, {"remove", generator_list(s.removed)}};
        step["ancilla_edge"] = s.ancilla_edge ? Json(*s.ancilla_edge) : Json(nullptr);
        steps.push_back(std::move(step));
    }
    Json out{{"num_vertices", schedule.num_vertices},
             {"num_edges", schedule.num_edges},
             {"initial", generator_list(schedule.initial)},
             {"steps", std::move(steps)},
             {"readout", generator_list(schedule.readout)}};
    if (schedule.site) {
        const ExchangeSite &s = *schedule.site;
        out["site"] = {{"center", s.center},       {"yy_partner", s.yy_partner}, {"xx_partner", s.xx_partner},
                       {"outer", s.outer},         {"zz_a", s.zz_a},             {"zz_b", s.zz_b},
                       {"yy_edge", s.yy_edge},     {"xx_edge", s.xx_edge},
                       {"yy_partner_check", s.yy_partner_check.str()}};
    }
    return out;
}

Json to_json(const TruncatedExperiment &t) {
    return Json{{"vertices", t.vertices},
                {"edges", t.edges},
                {"initial", generator_list(t.initial)},
                {"measurements", generator_list(t.measurements)},
                {"readout", generator_list(t.readout)}};
}

}  // namespace majex
