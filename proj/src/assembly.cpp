#include "slipstokes/assembly.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

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

// Local dof order per cell: [v0x v0y v1x v1y v2x v2y | p0 p1 p2].
constexpr int kCellDofs = 9;
constexpr int kCellLhsSlots = kCellDofs * kCellDofs + 6;  // + mean couplings
// Local dof order per facet: 6 cell velocity dofs, then pressure at the two
// facet endpoints.
constexpr int kFacetDofs = 8;
constexpr int kFacetLhsSlots = kFacetDofs * kFacetDofs;

/// Symmetric gradient of the basis function (basis k, component c) whose
/// scalar gradient is g.
Mat2 basis_sym_gradient(Vec2 g, int c) {
    Mat2 grad;
    grad(c, 0) = g.x;
    grad(c, 1) = g.y;
    return sym(grad);
}

void cell_global_dofs(const Triangulation& mesh, const SystemSpaces& spaces, int cell,
                      int out[kCellDofs]) {
    const auto& t = mesh.cells[cell];
    for (int k = 0; k < 3; ++k) {
        out[2 * k] = spaces.velocity_dof(t[k], 0);
        out[2 * k + 1] = spaces.velocity_dof(t[k], 1);
        out[6 + k] = spaces.pressure_dof(t[k]);
    }
}

/// sigma(., .) n per facet-local dof at arclength parameter s: velocity dofs
/// give the constant 2 mu D(phi) n, the endpoint pressure dofs give -trace n.
void facet_sigma_n(const CellGeometry& g, Vec2 n, double mu_visc, double s,
                   Vec2 out[kFacetDofs]) {
    for (int k = 0; k < 3; ++k)
        for (int c = 0; c < 2; ++c)
            out[2 * k + c] = 2.0 * mu_visc * (basis_sym_gradient(g.grad[k], c) * n);
    out[6] = -(1.0 - s) * n;
    out[7] = -s * n;
}

SLIPSTOKES_NOINLINE void lhs_cell_kernel(const Triangulation& mesh,
                                         const SystemSpaces& spaces,
                                         const ProblemData& data, int cell,
                                         Triplet* out) {
    const CellGeometry g = cell_geometry(mesh, cell);
    const double area = g.area;
    const double h2 = mesh.cell_diameters[cell] * mesh.cell_diameters[cell];
    const auto& rule = triangle_rule_degree4();

    // scalar P1 mass matrix and basis integrals
    double mass[3][3] = {};
    double intphi[3] = {};
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
        const auto b = rule.barycentric(static_cast<int>(q));
        const double w = 2.0 * area * rule.weights[q];
        for (int k = 0; k < 3; ++k) {
            intphi[k] += w * b[k];
            for (int l = 0; l < 3; ++l) mass[k][l] += w * b[k] * b[l];
        }
    }

    Mat2 dsym[3][2];
    for (int k = 0; k < 3; ++k)
        for (int c = 0; c < 2; ++c) dsym[k][c] = basis_sym_gradient(g.grad[k], c);

    double L[kCellDofs][kCellDofs] = {};
    for (int k = 0; k < 3; ++k) {
        for (int c = 0; c < 2; ++c) {
            const int a = 2 * k + c;
            for (int l = 0; l < 3; ++l) {
                for (int d = 0; d < 2; ++d) {
                    const int b = 2 * l + d;
                    double v = 2.0 * data.mu * contract(dsym[l][d], dsym[k][c]) * area;
                    if (c == d) v += (1.0 - data.alpha1 * h2) * mass[k][l];
                    L[a][b] = v;
                }
                // -(p, div v) and -alpha1 h^2 (grad p, v)
                const double gkc = (c == 0) ? g.grad[k].x : g.grad[k].y;
                const Vec2 gl = g.grad[l];
                L[a][6 + l] = -gkc * intphi[l] - data.alpha1 * h2 * ((c == 0) ? gl.x : gl.y) * intphi[k];
            }
        }
    }
    for (int a = 0; a < 3; ++a) {  // pressure test rows
        const Vec2 ga = g.grad[a];
        for (int l = 0; l < 3; ++l) {
            for (int d = 0; d < 2; ++d) {
                // (q, div u) + alpha1 h^2 (u, grad q)
                const double gld = (d == 0) ? g.grad[l].x : g.grad[l].y;
                const double gad = (d == 0) ? ga.x : ga.y;
                L[6 + a][2 * l + d] = gld * intphi[a] + data.alpha1 * h2 * gad * intphi[l];
            }
            // alpha1 h^2 (grad p, grad q)
            L[6 + a][6 + l] = data.alpha1 * h2 * dot(g.grad[l], ga) * area;
        }
    }

    int dofs[kCellDofs];
    cell_global_dofs(mesh, spaces, cell, dofs);
    Triplet* slot = out;
    for (int a = 0; a < kCellDofs; ++a)
        for (int b = 0; b < kCellDofs; ++b) *slot++ = {dofs[a], dofs[b], L[a][b]};
    for (int k = 0; k < 3; ++k) {
        *slot++ = {dofs[6 + k], spaces.mean_constraint_index, intphi[k]};
        *slot++ = {spaces.mean_constraint_index, dofs[6 + k], intphi[k]};
    }
}

SLIPSTOKES_NOINLINE void lhs_facet_kernel(const Triangulation& mesh,
                                          const SystemSpaces& spaces,
                                          const ProblemData& data, int facet,
                                          Triplet* out) {
    const auto& bf = mesh.boundary_facets[facet];
    const CellGeometry g = cell_geometry(mesh, bf.cell);
    const double he = bf.length;
    const auto& rule = edge_rule_degree3();

    double L[kFacetDofs][kFacetDofs] = {};
    Vec2 sn[kFacetDofs];
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
        facet_sigma_n(g, bf.normal, data.mu, rule.points[q], sn);
        const double w = he * rule.weights[q];
        for (int a = 0; a < kFacetDofs; ++a)
            for (int b = 0; b < kFacetDofs; ++b)
                L[a][b] -= data.alpha2 * he * w * dot(sn[b], sn[a]);
    }

    int dofs[kFacetDofs];
    const auto& t = mesh.cells[bf.cell];
    for (int k = 0; k < 3; ++k) {
        dofs[2 * k] = spaces.velocity_dof(t[k], 0);
        dofs[2 * k + 1] = spaces.velocity_dof(t[k], 1);
    }
    dofs[6] = spaces.pressure_dof(bf.endpoints[0]);
    dofs[7] = spaces.pressure_dof(bf.endpoints[1]);
    Triplet* slot = out;
    for (int a = 0; a < kFacetDofs; ++a)
        for (int b = 0; b < kFacetDofs; ++b) *slot++ = {dofs[a], dofs[b], L[a][b]};
}

SLIPSTOKES_NOINLINE void rhs_load_cell_kernel(const Triangulation& mesh,
                                              const ProblemData& data, int cell,
                                              double out[kCellDofs]) {
    const CellGeometry g = cell_geometry(mesh, cell);
    const double h2 = mesh.cell_diameters[cell] * mesh.cell_diameters[cell];
    const auto& rule = triangle_rule_degree4();

    double load[kCellDofs] = {};
    Vec2 int_force{0.0, 0.0};
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
        const auto b = rule.barycentric(static_cast<int>(q));
        const Vec2 x = b[0] * g.x[0] + b[1] * g.x[1] + b[2] * g.x[2];
        const double w = 2.0 * g.area * rule.weights[q];
        const Vec2 f = data.body_force(x);
        int_force += w * f;
        for (int k = 0; k < 3; ++k) {
            load[2 * k] += w * f.x * b[k];
            load[2 * k + 1] += w * f.y * b[k];
        }
    }
    for (int a = 0; a < 6; ++a) out[a] = (1.0 - data.alpha1 * h2) * load[a];
    for (int k = 0; k < 3; ++k) out[6 + k] = data.alpha1 * h2 * dot(g.grad[k], int_force);
}

/// Trace of the cell P1 basis along the facet, local vertex k at parameter s.
double facet_trace(const std::array<int, 3>& cell_vertices, const std::array<int, 2>& ep,
                   int k, double s) {
    if (cell_vertices[k] == ep[0]) return 1.0 - s;
    if (cell_vertices[k] == ep[1]) return s;
    return 0.0;
}

SLIPSTOKES_NOINLINE void rhs_boundary_facet_kernel(const Triangulation& mesh,
                                                   const ProblemData& data, int facet,
                                                   Vec2 lambda, double out[kFacetDofs]) {
    const auto& bf = mesh.boundary_facets[facet];
    const CellGeometry g = cell_geometry(mesh, bf.cell);
    const auto& t = mesh.cells[bf.cell];
    const double he = bf.length;
    const auto& rule = edge_rule_degree3();

    for (int a = 0; a < kFacetDofs; ++a) out[a] = 0.0;
    Vec2 sn[kFacetDofs];
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
        const double s = rule.points[q];
        const double w = he * rule.weights[q];
        // (lambda, v)_E
        for (int k = 0; k < 3; ++k) {
            const double tr = facet_trace(t, bf.endpoints, k, s);
            out[2 * k] += w * lambda.x * tr;
            out[2 * k + 1] += w * lambda.y * tr;
        }
        // -alpha2 h_E (lambda, sigma(v,q) n)_E
        facet_sigma_n(g, bf.normal, data.mu, s, sn);
        for (int a = 0; a < kFacetDofs; ++a)
            out[a] -= data.alpha2 * he * w * dot(lambda, sn[a]);
    }
}

SLIPSTOKES_NOINLINE double bh_cell_term(const Triangulation& mesh, const ProblemData& data,
                                        int cell, const VelocityField& u,
                                        const PressureField& p, const VelocityField& v,
                                        const PressureField& q) {
    const CellGeometry g = cell_geometry(mesh, cell);
    const double h2 = mesh.cell_diameters[cell] * mesh.cell_diameters[cell];
    const auto& rule = triangle_rule_degree4();

    const Mat2 gu = u.gradient(cell);
    const Mat2 gv = v.gradient(cell);
    const Vec2 gp = p.gradient(cell);
    const Vec2 gq = q.gradient(cell);
    const double div_u = gu(0, 0) + gu(1, 1);
    const double div_v = gv(0, 0) + gv(1, 1);

    double sum = 0.0;
    for (std::size_t k = 0; k < rule.points.size(); ++k) {
        const auto b = rule.barycentric(static_cast<int>(k));
        const double w = 2.0 * g.area * rule.weights[k];
        const Vec2 ux = u.value(cell, b);
        const Vec2 vx = v.value(cell, b);
        sum += w * (dot(ux, vx) + q.value(cell, b) * div_u - p.value(cell, b) * div_v);
        sum -= data.alpha1 * h2 * w * dot(ux + gp, vx - gq);
    }
    sum += 2.0 * data.mu * contract(sym(gu), sym(gv)) * g.area;
    return sum;
}

SLIPSTOKES_NOINLINE double bh_facet_term(const Triangulation& mesh, const ProblemData& data,
                                         int facet, const VelocityField& u,
                                         const PressureField& p, Vec2 lambda,
                                         const VelocityField& v, const PressureField& q,
                                         Vec2 mu_test) {
    const auto& bf = mesh.boundary_facets[facet];
    const auto& t = mesh.cells[bf.cell];
    const double he = bf.length;
    const auto& rule = edge_rule_degree3();

    const Mat2 du = sym(u.gradient(bf.cell));
    const Mat2 dv = sym(v.gradient(bf.cell));

    double sum = 0.0;
    for (std::size_t k = 0; k < rule.points.size(); ++k) {
        const double s = rule.points[k];
        const double w = he * rule.weights[k];
        Vec2 ux{0.0, 0.0}, vx{0.0, 0.0};
        double px = 0.0, qx = 0.0;
        for (int j = 0; j < 3; ++j) {
            const double tr = facet_trace(t, bf.endpoints, j, s);
            ux += tr * u.at_vertex(t[j]);
            vx += tr * v.at_vertex(t[j]);
            px += tr * p.values[t[j]];
            qx += tr * q.values[t[j]];
        }
        const Vec2 sig_u = 2.0 * data.mu * (du * bf.normal) - px * bf.normal;
        const Vec2 sig_v = 2.0 * data.mu * (dv * bf.normal) - qx * bf.normal;
        sum -= w * (dot(lambda, vx) + dot(mu_test, ux));
        sum -= data.alpha2 * he * w * dot(lambda - sig_u, mu_test - sig_v);
    }
    return sum;
}

SLIPSTOKES_NOINLINE double lh_cell_term(const Triangulation& mesh, const ProblemData& data,
                                        int cell, const VelocityField& v,
                                        const PressureField& q) {
    const CellGeometry g = cell_geometry(mesh, cell);
    const double h2 = mesh.cell_diameters[cell] * mesh.cell_diameters[cell];
    const auto& rule = triangle_rule_degree4();
    const Vec2 gq = q.gradient(cell);

    double fv = 0.0;
    Vec2 int_force{0.0, 0.0};
    for (std::size_t k = 0; k < rule.points.size(); ++k) {
        const auto b = rule.barycentric(static_cast<int>(k));
        const Vec2 x = b[0] * g.x[0] + b[1] * g.x[1] + b[2] * g.x[2];
        const double w = 2.0 * g.area * rule.weights[k];
        const Vec2 f = data.body_force(x);
        fv += w * dot(f, v.value(cell, b));
        int_force += w * f;
    }
    return (1.0 - data.alpha1 * h2) * fv + data.alpha1 * h2 * dot(gq, int_force);
}

template <typename Kernel>
void run_cells(const Triangulation& mesh, Backend backend, Kernel&& kernel) {
    const int nc = mesh.cell_count();
#if defined(_OPENMP)
    if (backend == Backend::openmp) {
#pragma omp parallel for schedule(static)
        for (int c = 0; c < nc; ++c) kernel(c);
        return;
    }
#else
    (void)backend;
#endif
    for (int c = 0; c < nc; ++c) kernel(c);
}

void check_same_mesh(const Triangulation& mesh, const VelocityField& u,
                     const PressureField& p) {
    if (u.mesh != &mesh || p.mesh != &mesh)
        throw std::invalid_argument("assembly: fields live on a different mesh");
    if (static_cast<int>(u.values.size()) != 2 * mesh.vertex_count() ||
        static_cast<int>(p.values.size()) != mesh.vertex_count())
        throw std::invalid_argument("assembly: field size mismatch");
}

}  // namespace

SparseMatrix assemble_lhs(const Triangulation& mesh, const SystemSpaces& spaces,
                          const ProblemData& data, Backend backend) {
    data.validate(mesh);
    const int nc = mesh.cell_count();
    const int nb = mesh.facet_count();
    std::vector<Triplet> triplets(static_cast<std::size_t>(nc) * kCellLhsSlots +
                                  static_cast<std::size_t>(nb) * kFacetLhsSlots);
    run_cells(mesh, backend, [&](int c) {
        lhs_cell_kernel(mesh, spaces, data, c, &triplets[static_cast<std::size_t>(c) * kCellLhsSlots]);
    });
    Triplet* facet_base = triplets.data() + static_cast<std::size_t>(nc) * kCellLhsSlots;
    for (int f = 0; f < nb; ++f)
        lhs_facet_kernel(mesh, spaces, data, f, facet_base + static_cast<std::size_t>(f) * kFacetLhsSlots);
    return SparseMatrix::from_triplets(spaces.total_size(), std::move(triplets));
}

std::vector<double> assemble_rhs_load(const Triangulation& mesh, const SystemSpaces& spaces,
                                      const ProblemData& data, Backend backend) {
    data.validate(mesh);
    const int nc = mesh.cell_count();
    std::vector<double> slots(static_cast<std::size_t>(nc) * kCellDofs);
    run_cells(mesh, backend, [&](int c) {
        rhs_load_cell_kernel(mesh, data, c, &slots[static_cast<std::size_t>(c) * kCellDofs]);
    });
    std::vector<double> rhs(spaces.total_size(), 0.0);
    for (int c = 0; c < nc; ++c) {
        int dofs[kCellDofs];
        cell_global_dofs(mesh, spaces, c, dofs);
        for (int a = 0; a < kCellDofs; ++a)
            rhs[dofs[a]] += slots[static_cast<std::size_t>(c) * kCellDofs + a];
    }
    return rhs;
}

void add_rhs_boundary_terms(std::vector<double>& rhs, const Triangulation& mesh,
                            const SystemSpaces& spaces, const ProblemData& data,
                            const MultiplierField& lambda) {
    if (lambda.mesh != &mesh ||
        lambda.values.size() != mesh.boundary_facets.size())
        throw std::invalid_argument("add_rhs_boundary_terms: multiplier facet count mismatch");
    for (int f = 0; f < mesh.facet_count(); ++f) {
        double local[kFacetDofs];
        rhs_boundary_facet_kernel(mesh, data, f, lambda.values[f], local);
        const auto& bf = mesh.boundary_facets[f];
        const auto& t = mesh.cells[bf.cell];
        for (int k = 0; k < 3; ++k) {
            rhs[spaces.velocity_dof(t[k], 0)] += local[2 * k];
            rhs[spaces.velocity_dof(t[k], 1)] += local[2 * k + 1];
        }
        rhs[spaces.pressure_dof(bf.endpoints[0])] += local[6];
        rhs[spaces.pressure_dof(bf.endpoints[1])] += local[7];
    }
}

std::vector<double> assemble_rhs(const Triangulation& mesh, const SystemSpaces& spaces,
                                 const ProblemData& data, const MultiplierField& lambda,
                                 Backend backend) {
    std::vector<double> rhs = assemble_rhs_load(mesh, spaces, data, backend);
    add_rhs_boundary_terms(rhs, mesh, spaces, data, lambda);
    return rhs;
}

SaddleSystem assemble_system(const Triangulation& mesh, const SystemSpaces& spaces,
                             const ProblemData& data, const MultiplierField& lambda,
                             Backend backend) {
    SaddleSystem sys;
    sys.matrix = assemble_lhs(mesh, spaces, data, backend);
    sys.rhs = assemble_rhs(mesh, spaces, data, lambda, backend);
    sys.mu = data.mu;
    sys.alpha1 = data.alpha1;
    sys.alpha2 = data.alpha2;
    return sys;
}

double evaluate_Bh(const Triangulation& mesh, const ProblemData& data,
                   const VelocityField& u, const PressureField& p,
                   const MultiplierField& lambda, const VelocityField& v,
                   const PressureField& q, const MultiplierField& mu_test,
                   Backend backend) {
    check_same_mesh(mesh, u, p);
    check_same_mesh(mesh, v, q);
    if (lambda.values.size() != mesh.boundary_facets.size() ||
        mu_test.values.size() != mesh.boundary_facets.size())
        throw std::invalid_argument("evaluate_Bh: multiplier facet count mismatch");

    std::vector<double> cell_terms(mesh.cell_count());
    run_cells(mesh, backend,
              [&](int c) { cell_terms[c] = bh_cell_term(mesh, data, c, u, p, v, q); });
    double sum = 0.0;
    for (double t : cell_terms) sum += t;
    for (int f = 0; f < mesh.facet_count(); ++f)
        sum += bh_facet_term(mesh, data, f, u, p, lambda.values[f], v, q, mu_test.values[f]);
    return sum;
}

double evaluate_Lh(const Triangulation& mesh, const ProblemData& data,
                   const VelocityField& v, const PressureField& q, Backend backend) {
    check_same_mesh(mesh, v, q);
    std::vector<double> cell_terms(mesh.cell_count());
    run_cells(mesh, backend,
              [&](int c) { cell_terms[c] = lh_cell_term(mesh, data, c, v, q); });
    double sum = 0.0;
    for (double t : cell_terms) sum += t;
    return sum;
}

Vec2 stress_normal_on_facet(const VelocityField& u, const PressureField& p, double mu,
                            int facet) {
    const Triangulation& mesh = *u.mesh;
    const auto& bf = mesh.boundary_facets[facet];
    const Mat2 d = sym(u.gradient(bf.cell));
    return 2.0 * mu * (d * bf.normal) - p.facet_mean(facet) * bf.normal;
}

MixedSolution split_solution(const Triangulation& mesh, const SystemSpaces& spaces,
                             const std::vector<double>& x, const MultiplierField& lambda,
                             double* mean_multiplier) {
    if (static_cast<int>(x.size()) != spaces.total_size())
        throw std::invalid_argument("split_solution: vector size mismatch");
    MixedSolution sol;
    sol.u = VelocityField::zero(mesh);
    sol.p = PressureField::zero(mesh);
    for (int i = 0; i < spaces.n_velocity_dofs; ++i) sol.u.values[i] = x[i];
    for (int i = 0; i < spaces.n_pressure_dofs; ++i)
        sol.p.values[i] = x[spaces.pressure_offset + i];
    sol.lambda = lambda;
    if (mean_multiplier) *mean_multiplier = x[spaces.mean_constraint_index];
    return sol;
}

MixedSolution solve_subproblem(const Triangulation& mesh, const SystemSpaces& spaces,
                               const SaddleSystem& system, const MultiplierField& lambda,
                               double* mean_multiplier) {
    const DirectSolver solver(system.matrix, /*bordered_last_unknown=*/true);
    const std::vector<double> x = solver.solve(system.rhs);
    const double be = backward_error(system.matrix, x, system.rhs);
    if (!(be <= 1e-10))
        throw std::runtime_error("solve_subproblem: backward error " + std::to_string(be) +
                                 " exceeds 1e-10");
    MixedSolution sol = split_solution(mesh, spaces, x, lambda, mean_multiplier);
    double pressure_integral = 0.0, area = 0.0;
    for (int c = 0; c < mesh.cell_count(); ++c) {
        const auto& t = mesh.cells[c];
        const double a = mesh.cell_area(c);
        area += a;
        pressure_integral +=
            a / 3.0 * (sol.p.values[t[0]] + sol.p.values[t[1]] + sol.p.values[t[2]]);
    }
    if (!(std::abs(pressure_integral) <= 1e-10 * area))
        throw std::runtime_error("solve_subproblem: pressure mean constraint violated");
    return sol;
}

}  // namespace slipstokes
