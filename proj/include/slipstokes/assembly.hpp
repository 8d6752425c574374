#pragma once

#include <vector>

#include "slipstokes/backend.hpp"
#include "slipstokes/linalg.hpp"
#include "slipstokes/mesh.hpp"
#include "slipstokes/problem.hpp"
#include "slipstokes/spaces.hpp"

namespace slipstokes {

/// The multiplier-frozen linear subproblem over (velocity, pressure, mean
/// scalar). The boundary traction enters only through the right-hand side.
struct SaddleSystem {
    SparseMatrix matrix;
    std::vector<double> rhs;
    double mu = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
};

/// Matrix of the multiplier-frozen subproblem:
///   (u,v) + (2 mu D(u), D(v)) + (q, div u) - (p, div v)
///   - alpha1 sum_T h_T^2 (u + grad p, v - grad q)_T
///   - alpha2 sum_E h_E (sigma(u,p) n, sigma(v,q) n)_E
/// plus the symmetric zero-mean pressure couplings.
SparseMatrix assemble_lhs(const Triangulation& mesh, const SystemSpaces& spaces,
                          const ProblemData& data, Backend backend = Backend::openmp);

/// Right-hand side
///   (F, v) - alpha1 sum_T h_T^2 (F, v - grad q)_T
///   + sum_E (lambda, v)_E - alpha2 sum_E h_E (lambda, sigma(v,q) n)_E
std::vector<double> assemble_rhs(const Triangulation& mesh, const SystemSpaces& spaces,
                                 const ProblemData& data, const MultiplierField& lambda,
                                 Backend backend = Backend::openmp);

/// Load part of the right-hand side (multiplier-independent).
std::vector<double> assemble_rhs_load(const Triangulation& mesh, const SystemSpaces& spaces,
                                      const ProblemData& data,
                                      Backend backend = Backend::openmp);

/// Adds the multiplier-dependent boundary terms to `rhs` in facet order.
void add_rhs_boundary_terms(std::vector<double>& rhs, const Triangulation& mesh,
                            const SystemSpaces& spaces, const ProblemData& data,
                            const MultiplierField& lambda);

SaddleSystem assemble_system(const Triangulation& mesh, const SystemSpaces& spaces,
                             const ProblemData& data, const MultiplierField& lambda,
                             Backend backend = Backend::openmp);

/// The full stabilised bilinear form with both multiplier slots. Property-test
/// surface; the solver path goes through assemble_lhs/assemble_rhs.
double evaluate_Bh(const Triangulation& mesh, const ProblemData& data,
                   const VelocityField& u, const PressureField& p,
                   const MultiplierField& lambda, const VelocityField& v,
                   const PressureField& q, const MultiplierField& mu_test,
                   Backend backend = Backend::openmp);

/// The stabilised load functional (F, v) - alpha1 sum_T h_T^2 (F, v - grad q)_T.
double evaluate_Lh(const Triangulation& mesh, const ProblemData& data,
                   const VelocityField& v, const PressureField& q,
                   Backend backend = Backend::openmp);

/// Facet mean of sigma(u,p) n = 2 mu D(u) n - p n; exact for P1 fields since
/// D(u) is constant on the adjacent cell and p is linear along the facet.
Vec2 stress_normal_on_facet(const VelocityField& u, const PressureField& p, double mu,
                            int facet);

/// Splits a solved system vector into fields plus the mean-constraint scalar.
MixedSolution split_solution(const Triangulation& mesh, const SystemSpaces& spaces,
                             const std::vector<double>& x, const MultiplierField& lambda,
                             double* mean_multiplier = nullptr);

/// Factor-and-solve of the assembled subproblem with the backward-error and
/// pressure-mean post-checks.
MixedSolution solve_subproblem(const Triangulation& mesh, const SystemSpaces& spaces,
                               const SaddleSystem& system, const MultiplierField& lambda,
                               double* mean_multiplier = nullptr);

}  // namespace slipstokes
