#pragma once

#include <array>
#include <vector>

#include "slipstokes/mesh.hpp"
#include "slipstokes/vec2.hpp"

namespace slipstokes {

/// Rule on the reference triangle {(0,0),(1,0),(0,1)}; weights sum to the
/// reference measure 1/2. Physical integration carries the factor 2|T|.
struct TriangleRule {
    std::vector<Vec2> points;
    std::vector<double> weights;
    int degree = 0;

    std::array<double, 3> barycentric(int q) const {
        return {1.0 - points[q].x - points[q].y, points[q].x, points[q].y};
    }
};

/// Rule on [0,1]; weights sum to 1.
struct EdgeRule {
    std::vector<double> points;
    std::vector<double> weights;
    int degree = 0;
};

/// 6-point rule, exact through degree 4.
const TriangleRule& triangle_rule_degree4();

/// 2-point Gauss rule, exact through degree 3.
const EdgeRule& edge_rule_degree3();

/// Integrate f(x) over cell T; f receives the physical point and the
/// barycentric coordinates.
template <typename F>
double integrate_cell(const Triangulation& mesh, int cell, const TriangleRule& rule, F&& f) {
    const CellGeometry g = cell_geometry(mesh, cell);
    double sum = 0.0;
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
        const auto b = rule.barycentric(static_cast<int>(q));
        const Vec2 x = b[0] * g.x[0] + b[1] * g.x[1] + b[2] * g.x[2];
        sum += rule.weights[q] * f(x, b);
    }
    return 2.0 * g.area * sum;
}

/// Integrate f(x, s) over boundary facet E, s in [0,1] along the facet.
template <typename F>
double integrate_facet(const Triangulation& mesh, int facet, const EdgeRule& rule, F&& f) {
    const auto& bf = mesh.boundary_facets[facet];
    const Vec2 a = mesh.vertices[bf.endpoints[0]];
    const Vec2 b = mesh.vertices[bf.endpoints[1]];
    double sum = 0.0;
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
        const double s = rule.points[q];
        sum += rule.weights[q] * f(a + s * (b - a), s);
    }
    return bf.length * sum;
}

}  // namespace slipstokes
