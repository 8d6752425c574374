#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "slipstokes/norms.hpp"
#include "slipstokes/spaces.hpp"

using namespace slipstokes;

TEST_CASE("dof layout") {
    const Triangulation mesh = generate_square(3);
    const SystemSpaces s = make_spaces(mesh);
    CHECK(s.n_velocity_dofs == 2 * mesh.vertex_count());
    CHECK(s.n_pressure_dofs == mesh.vertex_count());
    CHECK(s.n_multiplier_dofs == 2 * mesh.facet_count());
    CHECK(s.pressure_offset == s.n_velocity_dofs);
    CHECK(s.mean_constraint_index == s.n_velocity_dofs + s.n_pressure_dofs);
    CHECK(s.total_size() == 3 * mesh.vertex_count() + 1);
    CHECK(s.velocity_dof(5, 1) == 11);
    CHECK(s.pressure_dof(0) == s.pressure_offset);
}

TEST_CASE("prolongation reproduces constants and linears") {
    const Triangulation coarse = generate_square(2);
    const Triangulation fine = refine_uniform(coarse);

    VelocityField c = VelocityField::zero(coarse);
    for (int v = 0; v < coarse.vertex_count(); ++v) c.set_vertex(v, {3.25, -1.5});
    const VelocityField f = prolong_velocity(c, fine);
    for (int v = 0; v < fine.vertex_count(); ++v) {
        CHECK(f.at_vertex(v).x == 3.25);
        CHECK(f.at_vertex(v).y == -1.5);
    }

    VelocityField lin = VelocityField::zero(coarse);
    for (int v = 0; v < coarse.vertex_count(); ++v)
        lin.set_vertex(v, {coarse.vertices[v].x, coarse.vertices[v].y});
    const VelocityField linf = prolong_velocity(lin, fine);
    for (int v = 0; v < fine.vertex_count(); ++v) {
        CHECK(linf.at_vertex(v).x == doctest::Approx(fine.vertices[v].x).epsilon(1e-15));
        CHECK(linf.at_vertex(v).y == doctest::Approx(fine.vertices[v].y).epsilon(1e-15));
    }
}

TEST_CASE("nestedness oracle: prolonged field is the same function") {
    const Triangulation coarse = generate_square(3);
    const Triangulation fine = refine_uniform(coarse);
    auto gen = oracle::rng(101);
    const VelocityField cu = oracle::random_velocity(coarse, gen);
    const PressureField cp = oracle::random_pressure(coarse, gen);
    const VelocityField fu = prolong_velocity(cu, fine);
    const PressureField fp = prolong_pressure(cp, fine);

    // integrate |difference|^2 (values and gradients) over the fine mesh,
    // evaluating the coarse field geometrically in the parent cell
    double err_h1 = 0.0;
    for (int c = 0; c < fine.cell_count(); ++c) {
        const int parent = c / 4;  // child order of refine_uniform
        const Mat2 dg = fu.gradient(c) - cu.gradient(parent);
        err_h1 += oracle::integrate_cell(fine, c, [&](Vec2 x, const std::array<double, 3>& b) {
            const auto pb = oracle::barycentric(coarse, parent, x);
            const Vec2 dv = fu.value(c, b) - cu.value(parent, pb);
            return norm_squared(dv) + contract(dg, dg);
        });
    }
    CHECK(std::sqrt(err_h1) < 1e-12);

    // L2 norm of the pressure is preserved under exact nesting
    double c_l2 = 0.0, f_l2 = 0.0;
    for (int c = 0; c < coarse.cell_count(); ++c)
        c_l2 += oracle::integrate_cell(coarse, c, [&](Vec2, const std::array<double, 3>& b) {
            const double v = cp.value(c, b);
            return v * v;
        });
    for (int c = 0; c < fine.cell_count(); ++c)
        f_l2 += oracle::integrate_cell(fine, c, [&](Vec2, const std::array<double, 3>& b) {
            const double v = fp.value(c, b);
            return v * v;
        });
    CHECK(std::sqrt(f_l2) == doctest::Approx(std::sqrt(c_l2)).epsilon(1e-12));
}

TEST_CASE("pressure prolongation preserves the zero mean") {
    const Triangulation coarse = generate_square(4);
    const Triangulation fine = refine_uniform(coarse);
    auto gen = oracle::rng(7);
    PressureField cp = oracle::random_pressure(coarse, gen);
    const double mean = field_integral(cp) / mesh_area(coarse);
    for (auto& v : cp.values) v -= mean;
    CHECK(std::abs(field_integral(cp)) < 1e-13);
    const PressureField fp = prolong_pressure(cp, fine);
    CHECK(std::abs(field_integral(fp)) < 1e-12);
}

TEST_CASE("prolongation is linear and restricts exactly") {
    const Triangulation coarse = generate_square(2);
    const Triangulation fine = refine_uniform(coarse);
    auto gen = oracle::rng(23);
    const VelocityField f = oracle::random_velocity(coarse, gen);
    const VelocityField g = oracle::random_velocity(coarse, gen);
    const double a = -0.75, b = 1.375;

    VelocityField combo = VelocityField::zero(coarse);
    for (std::size_t i = 0; i < combo.values.size(); ++i)
        combo.values[i] = a * f.values[i] + b * g.values[i];
    const VelocityField pc = prolong_velocity(combo, fine);
    const VelocityField pf = prolong_velocity(f, fine);
    const VelocityField pg = prolong_velocity(g, fine);
    for (std::size_t i = 0; i < pc.values.size(); ++i)
        CHECK(pc.values[i] ==
              doctest::Approx(a * pf.values[i] + b * pg.values[i]).epsilon(1e-14));

    // inherited coarse vertices keep their coefficients bitwise
    for (int v = 0; v < coarse.vertex_count(); ++v) {
        CHECK(pf.at_vertex(v).x == f.at_vertex(v).x);
        CHECK(pf.at_vertex(v).y == f.at_vertex(v).y);
    }
}

TEST_CASE("multiplier prolongation: inheritance and norm bookkeeping") {
    const Triangulation coarse = generate_square(4);
    const Triangulation fine = refine_uniform(coarse);
    auto gen = oracle::rng(4242);
    const MultiplierField cm = oracle::random_multiplier(coarse, gen);
    const MultiplierField fm = prolong_multiplier(cm, fine);

    for (std::size_t f = 0; f < fm.values.size(); ++f) {
        const Vec2 parent = cm.values[fine.parent_facet_map[f]];
        CHECK(fm.values[f].x == parent.x);
        CHECK(fm.values[f].y == parent.y);
    }

    // the boundary L2 norm is preserved: child lengths sum to the parent length
    CHECK(boundary_l2_norm(fm) == doctest::Approx(boundary_l2_norm(cm)).epsilon(1e-12));
    // the mesh-weighted surrogate picks up the extra h: exactly 1/sqrt(2)
    // on the square where all facets share one length per level
    CHECK(norm_multiplier(fm) ==
          doctest::Approx(norm_multiplier(cm) / std::sqrt(2.0)).epsilon(1e-12));

    // cone bound survives inheritance on straight boundaries
    MultiplierField inside = MultiplierField::zero(coarse);
    for (std::size_t f = 0; f < inside.values.size(); ++f) {
        const Vec2 n = coarse.boundary_facets[f].normal;
        inside.values[f] = 0.8 * n + 0.29 * perp(n);  // |tangential| = 0.29 < 0.3
    }
    const MultiplierField pin = prolong_multiplier(inside, fine);
    for (std::size_t f = 0; f < pin.values.size(); ++f) {
        const Vec2 n = fine.boundary_facets[f].normal;
        const Vec2 vt = pin.values[f] - dot(pin.values[f], n) * n;
        CHECK(norm(vt) <= 0.3);
    }
}

TEST_CASE("prolongation rejects non-nested meshes") {
    const Triangulation other = generate_square(2);
    const Triangulation fine = refine_uniform(generate_square(4));
    VelocityField field = VelocityField::zero(other);
    CHECK_THROWS_AS((void)prolong_velocity(field, fine), std::invalid_argument);

    const Triangulation level0 = generate_square(4);
    VelocityField f0 = VelocityField::zero(level0);
    CHECK_THROWS_AS((void)prolong_velocity(f0, level0), std::invalid_argument);
}

TEST_CASE("prolongation on the half disk applies the midpoint rule at the arc") {
    const Triangulation coarse = generate_halfdisk(1);
    const Triangulation fine = refine_uniform(coarse);
    VelocityField c = VelocityField::zero(coarse);
    for (int v = 0; v < coarse.vertex_count(); ++v) c.set_vertex(v, {1.0, 2.0});
    const VelocityField f = prolong_velocity(c, fine);
    for (int v = 0; v < fine.vertex_count(); ++v) {
        CHECK(f.at_vertex(v).x == 1.0);
        CHECK(f.at_vertex(v).y == 2.0);
    }
}
