#include "slipstokes/spaces.hpp"

#include <stdexcept>

namespace slipstokes {

SystemSpaces make_spaces(const Triangulation& mesh) {
    SystemSpaces s;
    s.n_velocity_dofs = 2 * mesh.vertex_count();
    s.n_pressure_dofs = mesh.vertex_count();
    s.n_multiplier_dofs = 2 * mesh.facet_count();
    s.velocity_offset = 0;
    s.pressure_offset = s.n_velocity_dofs;
    s.mean_constraint_index = s.n_velocity_dofs + s.n_pressure_dofs;
    return s;
}

Vec2 VelocityField::value(int cell, const std::array<double, 3>& bary) const {
    const auto& t = mesh->cells[cell];
    Vec2 u{0.0, 0.0};
    for (int k = 0; k < 3; ++k) u += bary[k] * at_vertex(t[k]);
    return u;
}

Mat2 VelocityField::gradient(int cell) const {
    const CellGeometry g = cell_geometry(*mesh, cell);
    const auto& t = mesh->cells[cell];
    Mat2 grad;
    for (int k = 0; k < 3; ++k) {
        const Vec2 u = at_vertex(t[k]);
        grad(0, 0) += u.x * g.grad[k].x;
        grad(0, 1) += u.x * g.grad[k].y;
        grad(1, 0) += u.y * g.grad[k].x;
        grad(1, 1) += u.y * g.grad[k].y;
    }
    return grad;
}

Vec2 VelocityField::facet_mean(int facet) const {
    const auto& e = mesh->boundary_facets[facet].endpoints;
    return 0.5 * (at_vertex(e[0]) + at_vertex(e[1]));
}

double PressureField::value(int cell, const std::array<double, 3>& bary) const {
    const auto& t = mesh->cells[cell];
    return bary[0] * values[t[0]] + bary[1] * values[t[1]] + bary[2] * values[t[2]];
}

Vec2 PressureField::gradient(int cell) const {
    const CellGeometry g = cell_geometry(*mesh, cell);
    const auto& t = mesh->cells[cell];
    Vec2 grad{0.0, 0.0};
    for (int k = 0; k < 3; ++k) grad += values[t[k]] * g.grad[k];
    return grad;
}

double PressureField::facet_mean(int facet) const {
    const auto& e = mesh->boundary_facets[facet].endpoints;
    return 0.5 * (values[e[0]] + values[e[1]]);
}

namespace {

/// Structural nestedness check: `fine` must be the uniform refinement of
/// `coarse`, with inherited vertices first and unchanged.
void require_refinement_of(const Triangulation& coarse, const Triangulation& fine) {
    const int nv = coarse.vertex_count();
    if (fine.level != coarse.level + 1 ||
        fine.parent_vertex_map.size() != fine.vertices.size() ||
        fine.vertex_count() < nv)
        throw std::invalid_argument("prolong: fine mesh is not a refinement of the coarse mesh");
    for (int v = 0; v < fine.vertex_count(); ++v) {
        const auto& pv = fine.parent_vertex_map[v];
        if (pv.a < 0 || pv.a >= nv || pv.b < 0 || pv.b >= nv)
            throw std::invalid_argument("prolong: parent vertex map does not reference the coarse mesh");
        if (v < nv) {
            if (!pv.is_copy() || pv.a != v ||
                coarse.vertices[v].x != fine.vertices[v].x ||
                coarse.vertices[v].y != fine.vertices[v].y)
                throw std::invalid_argument("prolong: coarse vertices are not embedded in the fine mesh");
        }
    }
}

}  // namespace

VelocityField prolong_velocity(const VelocityField& coarse, const Triangulation& fine_mesh) {
    require_refinement_of(*coarse.mesh, fine_mesh);
    VelocityField fine = VelocityField::zero(fine_mesh);
    for (int v = 0; v < fine_mesh.vertex_count(); ++v) {
        const auto& pv = fine_mesh.parent_vertex_map[v];
        fine.set_vertex(v, pv.is_copy()
                               ? coarse.at_vertex(pv.a)
                               : 0.5 * (coarse.at_vertex(pv.a) + coarse.at_vertex(pv.b)));
    }
    return fine;
}

PressureField prolong_pressure(const PressureField& coarse, const Triangulation& fine_mesh) {
    require_refinement_of(*coarse.mesh, fine_mesh);
    PressureField fine = PressureField::zero(fine_mesh);
    for (int v = 0; v < fine_mesh.vertex_count(); ++v) {
        const auto& pv = fine_mesh.parent_vertex_map[v];
        fine.values[v] = pv.is_copy() ? coarse.values[pv.a]
                                      : 0.5 * (coarse.values[pv.a] + coarse.values[pv.b]);
    }
    return fine;
}

MultiplierField prolong_multiplier(const MultiplierField& coarse, const Triangulation& fine_mesh) {
    require_refinement_of(*coarse.mesh, fine_mesh);
    if (fine_mesh.parent_facet_map.size() != fine_mesh.boundary_facets.size())
        throw std::invalid_argument("prolong: parent facet map missing");
    MultiplierField fine = MultiplierField::zero(fine_mesh);
    for (std::size_t f = 0; f < fine.values.size(); ++f) {
        const int parent = fine_mesh.parent_facet_map[f];
        if (parent < 0 || parent >= static_cast<int>(coarse.values.size()))
            throw std::invalid_argument("prolong: parent facet map does not reference the coarse mesh");
        fine.values[f] = coarse.values[parent];
    }
    return fine;
}

}  // namespace slipstokes
