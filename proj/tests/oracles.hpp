#pragma once

// Test-side oracles, deliberately independent of the library's quadrature
// and assembly paths: a degree-5 triangle rule and a 4-point Gauss edge rule
// with their own constants, plus seeded random field generators.

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "slipstokes/mesh.hpp"
#include "slipstokes/spaces.hpp"
#include "slipstokes/vec2.hpp"

namespace oracle {

using slipstokes::Mat2;
using slipstokes::MultiplierField;
using slipstokes::PressureField;
using slipstokes::Triangulation;
using slipstokes::Vec2;
using slipstokes::VelocityField;

/// Integrate f(x) over cell T with the 7-point degree-5 rule;
/// f: (physical point, barycentric) -> double.
template <typename F>
double integrate_cell(const Triangulation& mesh, int cell, F&& f) {
    static const std::array<std::array<double, 4>, 7> rule = [] {
        const double a = (6.0 - std::sqrt(15.0)) / 21.0;
        const double b = (6.0 + std::sqrt(15.0)) / 21.0;
        const double wa = (155.0 - std::sqrt(15.0)) / 1200.0;
        const double wb = (155.0 + std::sqrt(15.0)) / 1200.0;
        return std::array<std::array<double, 4>, 7>{{
            {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 9.0 / 40.0},
            {a, a, 1.0 - 2.0 * a, wa},
            {a, 1.0 - 2.0 * a, a, wa},
            {1.0 - 2.0 * a, a, a, wa},
            {b, b, 1.0 - 2.0 * b, wb},
            {b, 1.0 - 2.0 * b, b, wb},
            {1.0 - 2.0 * b, b, b, wb},
        }};
    }();
    const auto& t = mesh.cells[cell];
    const Vec2 x0 = mesh.vertices[t[0]], x1 = mesh.vertices[t[1]], x2 = mesh.vertices[t[2]];
    const double area = 0.5 * slipstokes::cross(x1 - x0, x2 - x0);
    double sum = 0.0;
    for (const auto& q : rule) {
        const std::array<double, 3> bary{q[0], q[1], q[2]};
        const Vec2 x = bary[0] * x0 + bary[1] * x1 + bary[2] * x2;
        sum += q[3] * f(x, bary);
    }
    return area * sum;
}

/// Integrate f(x, s) over a boundary facet with 4-point Gauss (degree 7).
template <typename F>
double integrate_facet(const Triangulation& mesh, int facet, F&& f) {
    static const std::array<std::array<double, 2>, 4> rule = {{
        {0.5 - 0.5 * 0.3399810435848563, 0.5 * 0.6521451548625461},
        {0.5 + 0.5 * 0.3399810435848563, 0.5 * 0.6521451548625461},
        {0.5 - 0.5 * 0.8611363115940526, 0.5 * 0.3478548451374538},
        {0.5 + 0.5 * 0.8611363115940526, 0.5 * 0.3478548451374538},
    }};
    const auto& bf = mesh.boundary_facets[facet];
    const Vec2 a = mesh.vertices[bf.endpoints[0]];
    const Vec2 b = mesh.vertices[bf.endpoints[1]];
    double sum = 0.0;
    for (const auto& q : rule) sum += q[1] * f(a + q[0] * (b - a), q[0]);
    return bf.length * sum;
}

/// P1 evaluation helpers that go through barycentric geometry only.
inline std::array<double, 3> barycentric(const Triangulation& mesh, int cell, Vec2 x) {
    const auto& t = mesh.cells[cell];
    const Vec2 x0 = mesh.vertices[t[0]], x1 = mesh.vertices[t[1]], x2 = mesh.vertices[t[2]];
    const double d = slipstokes::cross(x1 - x0, x2 - x0);
    const double b1 = slipstokes::cross(x - x0, x2 - x0) / d;
    const double b2 = slipstokes::cross(x1 - x0, x - x0) / d;
    return {1.0 - b1 - b2, b1, b2};
}

inline std::mt19937_64 rng(unsigned seed) { return std::mt19937_64(seed); }

inline VelocityField random_velocity(const Triangulation& mesh, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    VelocityField f = VelocityField::zero(mesh);
    for (auto& v : f.values) v = dist(gen);
    return f;
}

inline PressureField random_pressure(const Triangulation& mesh, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    PressureField f = PressureField::zero(mesh);
    for (auto& v : f.values) v = dist(gen);
    return f;
}

inline MultiplierField random_multiplier(const Triangulation& mesh, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    MultiplierField f = MultiplierField::zero(mesh);
    for (auto& v : f.values) v = {dist(gen), dist(gen)};
    return f;
}

}  // namespace oracle
