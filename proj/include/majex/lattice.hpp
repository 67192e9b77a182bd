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
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majex/parity.hpp"
#include "majex/pauli.hpp"

namespace majex {

enum class EdgeColor { Red, Green, Blue };

/// Red edges carry XX checks, green YY, blue ZZ.
char pauli_letter(EdgeColor color);
ParityBasis parity_basis(EdgeColor color);
std::string_view name(EdgeColor color);

struct Vertex {
    int row;
    int col;
};

struct Edge {
    int a;  // lower vertex id
    int b;
    EdgeColor color;
};

struct Hexagon {
    int row;
    int col;
    /// Boundary ring starting at the top-left vertex, clockwise in (row
    /// down, col right) coordinates; edges[k] joins vertices[k] and
    /// vertices[(k+1) % 6].
    std::array<int, 6> vertices;
    std::array<int, 6> edges;
};

/// Brick-wall embedding of a honeycomb patch.
///
/// Hexagon (r, c) occupies vertex rows r and r+1 and vertex columns
/// c0..c0+2 with c0 = 2c + (r mod 2). The patch is the union of the
/// rows x cols hexagons. Vertical edges join (r, c)-(r+1, c) when r + c is
/// even and are blue. The horizontal edge (r, c)-(r, c+1) is red when r + c
/// is even and green otherwise. Vertex ids are row-major in (row, col);
/// edge ids follow the order (a, b) of their endpoint ids.
class Lattice {
  public:
    /// Throws ConstructionError unless rows, cols >= 1.
    static Lattice build(int rows, int cols);

    int rows() const {
        return rows_;
    }
    int cols() const {
        return cols_;
    }
    const std::vector<Vertex> &vertices() const {
        return vertices_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const std::vector<Hexagon> &hexagons() const {
        return hexagons_;
    }
    std::size_t num_vertices() const {
        return vertices_.size();
    }

    std::optional<int> vertex_at(int row, int col) const;
    std::optional<int> edge_between(int u, int v) const;
    /// Edge of the given color at vertex v, if it lies inside the patch.
    std::optional<int> incident(int v, EdgeColor color) const;
    std::vector<int> incident_edges(int v) const;
    int other_end(int edge, int v) const;

    /// The color vertex v's edge of that orientation has in the infinite
    /// lattice, whether or not it is inside the patch.
    static EdgeColor vertical_color();
    static EdgeColor horizontal_color(int row, int left_col);

    /// Two-qubit check of an edge, on the vertex register.
    PauliOperator edge_operator(int edge) const;

    /// Product over the hexagon's six vertices of the Pauli matching the
    /// color of the vertex's edge that leaves the hexagon.
    PauliOperator hexagon_operator(int hexagon) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Hexagon> hexagons_;
    std::vector<std::vector<int>> incidence_;
};

enum class GeneratorKind { Edge, Hexagon, BoundaryZ };

struct GeneratorLabel {
    GeneratorKind kind;
    int id;  // edge, hexagon, or vertex id

    std::string str() const;
    auto operator<=>(const GeneratorLabel &) const = default;
};

struct Generator {
    GeneratorLabel label;
    PauliOperator op;
    bool operator==(const Generator &) const = default;
};

struct StabilizerSet {
    std::vector<Generator> generators;

    bool all_commute() const;
    std::size_t rank() const;
    bool contains(const GeneratorLabel &label) const;
};

/// ZZ on every blue edge, the hexagon operator on every hexagon, and a
/// single Z on every vertex whose blue edge leaves the patch (the boundary
/// restriction of that edge's ZZ).
StabilizerSet standard_stabilizers(const Lattice &lattice);

/// Vertices taking part in one exchange. The center carries the blue edge
/// zz_a; its green edge leads to yy_partner and its red edge to xx_partner,
/// whose blue edge is zz_b.
struct ExchangeSite {
    int center;
    int yy_partner;
    int xx_partner;
    int outer;  // other end of zz_a
    int zz_a;
    int zz_b;
    int yy_edge;
    int xx_edge;
    GeneratorLabel yy_partner_check;  // the Z-type check through yy_partner
};

struct ScheduleStep {
    Generator added;
    std::vector<Generator> removed;
    std::optional<int> ancilla_edge;
};

/// Code deformation sequence. Each step adds one check and removes every
/// current check that anticommutes with it. `readout` re-adds, as final Z
/// measurements, the checks removed and not restored by the steps.
struct ExchangeSchedule {
    std::size_t num_vertices = 0;
    std::size_t num_edges = 0;
    std::vector<Generator> initial;
    std::vector<ScheduleStep> steps;
    std::vector<Generator> readout;
    std::optional<ExchangeSite> site;

    std::vector<Generator> generators_after(std::size_t steps_applied) const;
    /// After all steps and the readout.
    std::vector<Generator> final_generators() const;
};

/// Adds `added` to `current`, returning the removed anticommuting checks.
std::vector<Generator> apply_deformation(std::vector<Generator> &current, const Generator &added);

/// The minimal exchange between the fermion pairs on blue edges zz_a and
/// zz_b: add YY on the center's green edge, then XX on the red edge joining
/// the center to zz_b, then restore ZZ on zz_a. zz_a and zz_b must be blue
/// edges joined by a red edge at an endpoint of zz_a (the center); throws
/// TopologyError otherwise.
ExchangeSchedule exchange_schedule(const Lattice &lattice, int zz_edge_a, int zz_edge_b);

/// First (zz_a, zz_b) pair, in edge-id order, accepted by exchange_schedule.
std::optional<std::pair<int, int>> find_exchange_edges(const Lattice &lattice);

struct Support {
    std::vector<int> vertices;  // lattice vertex ids
    std::vector<int> edges;     // lattice edge ids of ancillas
    /// Global qubit ids: vertex v -> v, edge e -> num_vertices + e.
    std::vector<int> qubits(std::size_t num_vertices) const;
    bool empty() const {
        return vertices.empty() && edges.empty();
    }
};

/// Vertices on which some added check acts with X or Y (only those can
/// change their Z value), plus the ancilla edges of added checks whose
/// restriction to those vertices still has weight two.
Support support(const ExchangeSchedule &schedule);

/// Restriction of a check to `qubits` (in that order). Z-type checks lose
/// the factors outside; other checks survive only with full support.
/// Returns nullopt when the check is dropped.
std::optional<PauliOperator> restrict_check(const PauliOperator &op, const std::vector<int> &qubits);

/// The exchange cut down to its support. Local qubit k is vertices[k];
/// for an exchange schedule the order is (yy_partner, center, xx_partner),
/// i.e. the roles v1, v2, v3.
struct TruncatedExperiment {
    std::vector<int> vertices;
    std::vector<int> edges;  // ancilla edges in step order: e1 (YY), e2 (XX)
    std::vector<Generator> initial;
    std::vector<Generator> measurements;
    std::vector<Generator> readout;
};

TruncatedExperiment truncate(const ExchangeSchedule &schedule);

}  // namespace majex
