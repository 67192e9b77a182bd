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

#include "majex/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "majex/errors.hpp"

namespace majex {

char pauli_letter(EdgeColor color) {
    switch (color) {
        case EdgeColor::Red:
            return 'X';
        case EdgeColor::Green:
            return 'Y';
        case EdgeColor::Blue:
            return 'Z';
    }
    return 'I';
}

ParityBasis parity_basis(EdgeColor color) {
    switch (color) {
        case EdgeColor::Red:
            return ParityBasis::XX;
        case EdgeColor::Green:
            return ParityBasis::YY;
        case EdgeColor::Blue:
            break;
    }
    return ParityBasis::ZZ;
}

std::string_view name(EdgeColor color) {
    switch (color) {
        case EdgeColor::Red:
            return "red";
        case EdgeColor::Green:
            return "green";
        case EdgeColor::Blue:
            return "blue";
    }
    return "?";
}

EdgeColor Lattice::vertical_color() {
    return EdgeColor::Blue;
}

EdgeColor Lattice::horizontal_color(int row, int left_col) {
    return ((row + left_col) % 2 == 0) ? EdgeColor::Red : EdgeColor::Green;
}

Lattice Lattice::build(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw ConstructionError("lattice needs rows, cols >= 1, got " + std::to_string(rows) + "x" +
                                std::to_string(cols));
    }
    Lattice lat;
    lat.rows_ = rows;
    lat.cols_ = cols;

    auto ring_of = [](int r, int c) {
        const int c0 = 2 * c + (r % 2);
        return std::array<std::pair<int, int>, 6>{
            {{r, c0}, {r, c0 + 1}, {r, c0 + 2}, {r + 1, c0 + 2}, {r + 1, c0 + 1}, {r + 1, c0}}};
    };

    std::set<std::pair<int, int>> coords;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            for (const auto &rc : ring_of(r, c)) {
                coords.insert(rc);
            }
        }
    }
    std::map<std::pair<int, int>, int> id_of;
    for (const auto &rc : coords) {
        id_of[rc] = static_cast<int>(lat.vertices_.size());
        lat.vertices_.push_back({rc.first, rc.second});
    }

    std::set<std::pair<int, int>> edge_pairs;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const auto ring = ring_of(r, c);
            for (int k = 0; k < 6; ++k) {
                const int u = id_of.at(ring[k]);
                const int v = id_of.at(ring[(k + 1) % 6]);
                edge_pairs.insert({std::min(u, v), std::max(u, v)});
            }
        }
    }
    std::map<std::pair<int, int>, int> edge_id;
    for (const auto &[a, b] : edge_pairs) {
        const Vertex &va = lat.vertices_[a];
        const Vertex &vb = lat.vertices_[b];
        const EdgeColor color =
            va.row == vb.row ? horizontal_color(va.row, std::min(va.col, vb.col)) : vertical_color();
        edge_id[{a, b}] = static_cast<int>(lat.edges_.size());
        lat.edges_.push_back({a, b, color});
    }

    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const auto ring = ring_of(r, c);
            Hexagon h{r, c, {}, {}};
            for (int k = 0; k < 6; ++k) {
                const int u = id_of.at(ring[k]);
                const int v = id_of.at(ring[(k + 1) % 6]);
                h.vertices[k] = u;
                h.edges[k] = edge_id.at({std::min(u, v), std::max(u, v)});
            }
            lat.hexagons_.push_back(h);
        }
    }

    lat.incidence_.assign(lat.vertices_.size(), {});
    for (std::size_t e = 0; e < lat.edges_.size(); ++e) {
        lat.incidence_[lat.edges_[e].a].push_back(static_cast<int>(e));
        lat.incidence_[lat.edges_[e].b].push_back(static_cast<int>(e));
    }
    return lat;
}

std::optional<int> Lattice::vertex_at(int row, int col) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), std::pair{row, col},
                               [](const Vertex &v, const std::pair<int, int> &rc) {
                                   return std::pair{v.row, v.col} < rc;
                               });
    if (it != vertices_.end() && it->row == row && it->col == col) {
        return static_cast<int>(it - vertices_.begin());
    }
    return std::nullopt;
}

std::optional<int> Lattice::edge_between(int u, int v) const {
    for (int e : incidence_.at(u)) {
        if (other_end(e, u) == v) {
            return e;
        }
    }
    return std::nullopt;
}

std::optional<int> Lattice::incident(int v, EdgeColor color) const {
    for (int e : incidence_.at(v)) {
        if (edges_[e].color == color) {
            return e;
        }
    }
    return std::nullopt;
}

std::vector<int> Lattice::incident_edges(int v) const {
    return incidence_.at(v);
}

int Lattice::other_end(int edge, int v) const {
    const Edge &e = edges_.at(edge);
    return e.a == v ? e.b : e.a;
}

PauliOperator Lattice::edge_operator(int edge) const {
    const Edge &e = edges_.at(edge);
    const char letter = pauli_letter(e.color);
    PauliOperator op(vertices_.size());
    op.set(e.a, letter);
    op.set(e.b, letter);
    return op;
}

PauliOperator Lattice::hexagon_operator(int hexagon) const {
    const Hexagon &h = hexagons_.at(hexagon);
    PauliOperator op(vertices_.size());
    for (int k = 0; k < 6; ++k) {
        const EdgeColor c1 = edges_[h.edges[k]].color;
        const EdgeColor c2 = edges_[h.edges[(k + 5) % 6]].color;
        EdgeColor outward = EdgeColor::Red;
        for (EdgeColor c : {EdgeColor::Red, EdgeColor::Green, EdgeColor::Blue}) {
            if (c != c1 && c != c2) {
                outward = c;
            }
        }
        op.set(h.vertices[k], pauli_letter(outward));
    }
    return op;
}

std::string GeneratorLabel::str() const {
    switch (kind) {
        case GeneratorKind::Edge:
            return "edge:" + std::to_string(id);
        case GeneratorKind::Hexagon:
            return "hex:" + std::to_string(id);
        case GeneratorKind::BoundaryZ:
            return "vertex:" + std::to_string(id);
    }
    return "?";
}

bool StabilizerSet::all_commute() const {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            if (!generators[i].op.commutes(generators[j].op)) {
                return false;
            }
        }
    }
    return true;
}

std::size_t StabilizerSet::rank() const {
    std::vector<PauliOperator> ops;
    for (const auto &g : generators) {
        ops.push_back(g.op);
    }
    return symplectic_rank(ops);
}

bool StabilizerSet::contains(const GeneratorLabel &label) const {
    return std::any_of(generators.begin(), generators.end(), [&](const Generator &g) { return g.label == label; });
}

StabilizerSet standard_stabilizers(const Lattice &lattice) {
    StabilizerSet set;
    for (std::size_t e = 0; e < lattice.edges().size(); ++e) {
        if (lattice.edges()[e].color == EdgeColor::Blue) {
            set.generators.push_back({{GeneratorKind::Edge, static_cast<int>(e)}, lattice.edge_operator(e)});
        }
    }
    for (std::size_t v = 0; v < lattice.num_vertices(); ++v) {
        if (!lattice.incident(v, EdgeColor::Blue)) {
            set.generators.push_back({{GeneratorKind::BoundaryZ, static_cast<int>(v)},
                                      PauliOperator::on(lattice.num_vertices(), 'Z', {v})});
        }
    }
    for (std::size_t h = 0; h < lattice.hexagons().size(); ++h) {
        set.generators.push_back({{GeneratorKind::Hexagon, static_cast<int>(h)}, lattice.hexagon_operator(h)});
    }
    return set;
}

std::vector<Generator> apply_deformation(std::vector<Generator> &current, const Generator &added) {
    std::vector<Generator> removed;
    std::vector<Generator> kept;
    for (auto &g : current) {
        if (g.op.commutes(added.op)) {
            kept.push_back(std::move(g));
        } else {
            removed.push_back(std::move(g));
        }
    }
    kept.push_back(added);
    current = std::move(kept);
    return removed;
}

std::vector<Generator> ExchangeSchedule::generators_after(std::size_t steps_applied) const {
    std::vector<Generator> current = initial;
    for (std::size_t k = 0; k < std::min(steps_applied, steps.size()); ++k) {
        apply_deformation(current, steps[k].added);
    }
    return current;
}

std::vector<Generator> ExchangeSchedule::final_generators() const {
    std::vector<Generator> current = generators_after(steps.size());
    for (const auto &g : readout) {
        apply_deformation(current, g);
    }
    return current;
}

namespace {

std::optional<ExchangeSite> locate_site(const Lattice &lat, int a, int b) {
    const Edge &ea = lat.edges()[a];
    const Edge &eb = lat.edges()[b];
    for (int u : {ea.a, ea.b}) {
        const auto red = lat.incident(u, EdgeColor::Red);
        const auto green = lat.incident(u, EdgeColor::Green);
        if (!red || !green) {
            continue;
        }
        const int q = lat.other_end(*red, u);
        if (q != eb.a && q != eb.b) {
            continue;
        }
        const int p = lat.other_end(*green, u);
        ExchangeSite site{};
        site.center = u;
        site.yy_partner = p;
        site.xx_partner = q;
        site.outer = lat.other_end(a, u);
        site.zz_a = a;
        site.zz_b = b;
        site.yy_edge = *green;
        site.xx_edge = *red;
        if (const auto pb = lat.incident(p, EdgeColor::Blue)) {
            site.yy_partner_check = {GeneratorKind::Edge, *pb};
        } else {
            site.yy_partner_check = {GeneratorKind::BoundaryZ, p};
        }
        return site;
    }
    return std::nullopt;
}

}  // namespace

ExchangeSchedule exchange_schedule(const Lattice &lattice, int zz_edge_a, int zz_edge_b) {
    const int n_edges = static_cast<int>(lattice.edges().size());
    for (int e : {zz_edge_a, zz_edge_b}) {
        if (e < 0 || e >= n_edges) {
            throw TopologyError("edge " + std::to_string(e) + " not in lattice");
        }
        if (lattice.edges()[e].color != EdgeColor::Blue) {
            throw TopologyError("edge " + std::to_string(e) + " is not a blue (ZZ) edge");
        }
    }
    if (zz_edge_a == zz_edge_b) {
        throw TopologyError("exchange needs two distinct blue edges");
    }
    const auto site = locate_site(lattice, zz_edge_a, zz_edge_b);
    if (!site) {
        throw TopologyError("blue edges " + std::to_string(zz_edge_a) + " and " + std::to_string(zz_edge_b) +
                            " are not joined by a red edge at a vertex that also has a green edge");
    }

    ExchangeSchedule s;
    s.num_vertices = lattice.num_vertices();
    s.num_edges = lattice.edges().size();
    s.site = site;
    s.initial = standard_stabilizers(lattice).generators;

    const Generator yy{{GeneratorKind::Edge, site->yy_edge}, lattice.edge_operator(site->yy_edge)};
    const Generator xx{{GeneratorKind::Edge, site->xx_edge}, lattice.edge_operator(site->xx_edge)};
    const Generator zz{{GeneratorKind::Edge, site->zz_a}, lattice.edge_operator(site->zz_a)};

    std::vector<Generator> current = s.initial;
    for (const auto &[g, ancilla] : {std::pair{yy, site->yy_edge}, {xx, site->xx_edge}, {zz, site->zz_a}}) {
        ScheduleStep step{g, apply_deformation(current, g), ancilla};
        s.steps.push_back(std::move(step));
    }
    for (const auto &g : s.initial) {
        const bool present =
            std::any_of(current.begin(), current.end(), [&](const Generator &c) { return c.label == g.label; });
        if (!present) {
            s.readout.push_back(g);
        }
    }
    return s;
}

std::optional<std::pair<int, int>> find_exchange_edges(const Lattice &lattice) {
    const auto &edges = lattice.edges();
    for (std::size_t a = 0; a < edges.size(); ++a) {
        if (edges[a].color != EdgeColor::Blue) {
            continue;
        }
        for (std::size_t b = 0; b < edges.size(); ++b) {
            if (b != a && edges[b].color == EdgeColor::Blue && locate_site(lattice, a, b)) {
                return std::pair{static_cast<int>(a), static_cast<int>(b)};
            }
        }
    }
    return std::nullopt;
}

std::vector<int> Support::qubits(std::size_t num_vertices) const {
    std::vector<int> out(vertices.begin(), vertices.end());
    for (int e : edges) {
        out.push_back(static_cast<int>(num_vertices) + e);
    }
    return out;
}

Support support(const ExchangeSchedule &schedule) {
    Support s;
    std::set<int> verts;
    for (const auto &step : schedule.steps) {
        for (std::size_t q = 0; q < step.added.op.width(); ++q) {
            if (step.added.op.x(q)) {
                verts.insert(static_cast<int>(q));
            }
        }
    }
    s.vertices.assign(verts.begin(), verts.end());
    for (const auto &step : schedule.steps) {
        if (!step.ancilla_edge) {
            continue;
        }
        const auto sup = step.added.op.support();
        const bool inside = sup.size() == 2 && verts.count(static_cast<int>(sup[0])) &&
                            verts.count(static_cast<int>(sup[1]));
        if (inside && std::find(s.edges.begin(), s.edges.end(), *step.ancilla_edge) == s.edges.end()) {
            s.edges.push_back(*step.ancilla_edge);
        }
    }
    return s;
}

std::optional<PauliOperator> restrict_check(const PauliOperator &op, const std::vector<int> &qubits) {
    std::vector<std::size_t> local(qubits.begin(), qubits.end());
    bool full = true;
    for (std::size_t q : op.support()) {
        if (std::find(local.begin(), local.end(), q) == local.end()) {
            full = false;
            break;
        }
    }
    if (!full && !op.is_z_type()) {
        return std::nullopt;
    }
    PauliOperator r = op.restricted(local);
    if (r.is_identity()) {
        return std::nullopt;
    }
    return r;
}

TruncatedExperiment truncate(const ExchangeSchedule &schedule) {
    const Support sup = support(schedule);
    TruncatedExperiment t;
    if (schedule.site) {
        t.vertices = {schedule.site->yy_partner, schedule.site->center, schedule.site->xx_partner};
    } else {
        t.vertices = sup.vertices;
    }
    t.edges = sup.edges;
    auto keep = [&](const std::vector<Generator> &gens, std::vector<Generator> &out) {
        for (const auto &g : gens) {
            if (auto r = restrict_check(g.op, t.vertices)) {
                out.push_back({g.label, std::move(*r)});
            }
        }
    };
    keep(schedule.initial, t.initial);
    std::vector<Generator> added;
    for (const auto &step : schedule.steps) {
        added.push_back(step.added);
    }
    keep(added, t.measurements);
    keep(schedule.readout, t.readout);
    return t;
}

}  // namespace majex
