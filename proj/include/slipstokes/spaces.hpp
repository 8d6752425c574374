#pragma once

#include <array>
#include <vector>

#include "slipstokes/mesh.hpp"
#include "slipstokes/vec2.hpp"

namespace slipstokes {

/// Dof layout for the P1 vector velocity / P1 pressure / P0 facet multiplier
/// triplet. The multiplier is updated outside the linear solve, so the system
/// holds velocity, pressure and one scalar enforcing the zero pressure mean.
struct SystemSpaces {
    int n_velocity_dofs = 0;
    int n_pressure_dofs = 0;
    int n_multiplier_dofs = 0;
    int velocity_offset = 0;
    int pressure_offset = 0;
    int mean_constraint_index = 0;

    int total_size() const { return n_velocity_dofs + n_pressure_dofs + 1; }
    int velocity_dof(int vertex, int component) const { return 2 * vertex + component; }
    int pressure_dof(int vertex) const { return pressure_offset + vertex; }
};

SystemSpaces make_spaces(const Triangulation& mesh);

/// Continuous piecewise-linear vector field, two interleaved components per
/// vertex. Fields reference the mesh they live on; the mesh must outlive
/// the field.
struct VelocityField {
    const Triangulation* mesh = nullptr;
    std::vector<double> values;

    static VelocityField zero(const Triangulation& m) {
        return {&m, std::vector<double>(2 * m.vertex_count(), 0.0)};
    }
    Vec2 at_vertex(int v) const { return {values[2 * v], values[2 * v + 1]}; }
    void set_vertex(int v, Vec2 u) {
        values[2 * v] = u.x;
        values[2 * v + 1] = u.y;
    }
    Vec2 value(int cell, const std::array<double, 3>& bary) const;
    /// Constant per-cell gradient, (i,j) = du_i/dx_j.
    Mat2 gradient(int cell) const;
    /// Mean of the trace over a boundary facet (endpoint average).
    Vec2 facet_mean(int facet) const;
};

/// Continuous piecewise-linear scalar field.
struct PressureField {
    const Triangulation* mesh = nullptr;
    std::vector<double> values;

    static PressureField zero(const Triangulation& m) {
        return {&m, std::vector<double>(m.vertex_count(), 0.0)};
    }
    double value(int cell, const std::array<double, 3>& bary) const;
    Vec2 gradient(int cell) const;
    double facet_mean(int facet) const;
};

/// Piecewise-constant 2-vector per boundary facet.
struct MultiplierField {
    const Triangulation* mesh = nullptr;
    std::vector<Vec2> values;

    static MultiplierField zero(const Triangulation& m) {
        return {&m, std::vector<Vec2>(m.boundary_facets.size())};
    }
};

struct MixedSolution {
    VelocityField u;
    PressureField p;
    MultiplierField lambda;
};

/// Exact embedding of a coarse P1 field into the P1 space of the once-refined
/// mesh: inherited vertices copy, edge midpoints average. Throws
/// std::invalid_argument if `fine_mesh` is not a refinement of the field's
/// mesh.
VelocityField prolong_velocity(const VelocityField& coarse, const Triangulation& fine_mesh);
PressureField prolong_pressure(const PressureField& coarse, const Triangulation& fine_mesh);

/// P0 embedding: children inherit the parent facet value.
MultiplierField prolong_multiplier(const MultiplierField& coarse, const Triangulation& fine_mesh);

}  // namespace slipstokes
