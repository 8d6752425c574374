#include "slipstokes/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "slipstokes/quadrature.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

#if defined(__GNUC__)
#define SLIPSTOKES_NOINLINE __attribute__((noinline))
#else
#define SLIPSTOKES_NOINLINE
#endif

namespace slipstokes {

namespace {

SLIPSTOKES_NOINLINE double cell_l2_sq(const PressureField& f, int cell) {
    return integrate_cell(*f.mesh, cell, triangle_rule_degree4(),
                          [&](Vec2, const std::array<double, 3>& b) {
                              const double v = f.value(cell, b);
                              return v * v;
                          });
}

SLIPSTOKES_NOINLINE double cell_l2_sq(const VelocityField& f, int cell) {
    return integrate_cell(*f.mesh, cell, triangle_rule_degree4(),
                          [&](Vec2, const std::array<double, 3>& b) {
                              return norm_squared(f.value(cell, b));
                          });
}

SLIPSTOKES_NOINLINE double cell_grad_sq(const PressureField& f, int cell) {
    const CellGeometry g = cell_geometry(*f.mesh, cell);
    return norm_squared(f.gradient(cell)) * g.area;
}

SLIPSTOKES_NOINLINE double cell_grad_sq(const VelocityField& f, int cell) {
    const CellGeometry g = cell_geometry(*f.mesh, cell);
    const Mat2 grad = f.gradient(cell);
    return contract(grad, grad) * g.area;
}

/// Per-cell contributions into a slot array, then an index-ordered sum; the
/// result does not depend on the backend or thread count.
template <typename CellFn>
double reduce_cells(const Triangulation& mesh, Backend backend, CellFn&& fn) {
    const int nc = mesh.cell_count();
    std::vector<double> contrib(nc);
#if defined(_OPENMP)
    if (backend == Backend::openmp) {
#pragma omp parallel for schedule(static)
        for (int c = 0; c < nc; ++c) contrib[c] = fn(c);
    } else
#else
    (void)backend;
#endif
    {
        for (int c = 0; c < nc; ++c) contrib[c] = fn(c);
    }
    double sum = 0.0;
    for (double v : contrib) sum += v;
    return sum;
}

}  // namespace

double norm_l2(const PressureField& f, Backend backend) {
    return std::sqrt(reduce_cells(*f.mesh, backend, [&](int c) { return cell_l2_sq(f, c); }));
}

double norm_l2(const VelocityField& f, Backend backend) {
    return std::sqrt(reduce_cells(*f.mesh, backend, [&](int c) { return cell_l2_sq(f, c); }));
}

double norm_h1(const PressureField& f, Backend backend) {
    return std::sqrt(reduce_cells(*f.mesh, backend, [&](int c) {
        return cell_l2_sq(f, c) + cell_grad_sq(f, c);
    }));
}

double norm_h1(const VelocityField& f, Backend backend) {
    return std::sqrt(reduce_cells(*f.mesh, backend, [&](int c) {
        return cell_l2_sq(f, c) + cell_grad_sq(f, c);
    }));
}

double norm_multiplier(const MultiplierField& chi) {
    double sum = 0.0;
    for (std::size_t f = 0; f < chi.values.size(); ++f) {
        const double he = chi.mesh->boundary_facets[f].length;
        sum += he * he * norm_squared(chi.values[f]);
    }
    return std::sqrt(sum);
}

double boundary_l2_norm(const MultiplierField& chi) {
    double sum = 0.0;
    for (std::size_t f = 0; f < chi.values.size(); ++f)
        sum += chi.mesh->boundary_facets[f].length * norm_squared(chi.values[f]);
    return std::sqrt(sum);
}

double field_integral(const PressureField& f) {
    double sum = 0.0;
    const Triangulation& mesh = *f.mesh;
    for (int c = 0; c < mesh.cell_count(); ++c) {
        const auto& t = mesh.cells[c];
        sum += mesh.cell_area(c) / 3.0 * (f.values[t[0]] + f.values[t[1]] + f.values[t[2]]);
    }
    return sum;
}

SuccessiveErrors successive_error(const MixedSolution& coarse, const MixedSolution& fine) {
    const Triangulation& fine_mesh = *fine.u.mesh;
    VelocityField du = prolong_velocity(coarse.u, fine_mesh);
    PressureField dp = prolong_pressure(coarse.p, fine_mesh);
    MultiplierField dl = prolong_multiplier(coarse.lambda, fine_mesh);
    for (std::size_t i = 0; i < du.values.size(); ++i) du.values[i] -= fine.u.values[i];
    for (std::size_t i = 0; i < dp.values.size(); ++i) dp.values[i] -= fine.p.values[i];
    for (std::size_t i = 0; i < dl.values.size(); ++i) dl.values[i] -= fine.lambda.values[i];

    SuccessiveErrors e;
    e.abs_u = norm_h1(du);
    e.abs_p = norm_l2(dp);
    e.abs_lambda = norm_multiplier(dl);
    const double nu = norm_h1(fine.u);
    const double np = norm_l2(fine.p);
    const double nl = norm_multiplier(fine.lambda);
    e.rel_u = nu > 0.0 ? e.abs_u / nu : e.abs_u;
    e.rel_p = np > 0.0 ? e.abs_p / np : e.abs_p;
    e.rel_lambda = nl > 0.0 ? e.abs_lambda / nl : e.abs_lambda;
    return e;
}

}  // namespace slipstokes
