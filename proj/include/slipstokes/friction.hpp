#pragma once

#include <optional>
#include <vector>

#include "slipstokes/assembly.hpp"
#include "slipstokes/mesh.hpp"
#include "slipstokes/problem.hpp"
#include "slipstokes/spaces.hpp"

namespace slipstokes {

struct UzawaConfig {
    double rho = 0.4;
    double tol = 1e-5;
    int max_iterations = 10000;
    double alpha2 = 0.01;  // must equal ProblemData::alpha2, cross-checked

    void validate() const;
};

struct UzawaResult {
    VelocityField u;
    PressureField p;
    MultiplierField lambda;
    double mean_multiplier = 0.0;
    int iterations = 0;
    double final_change = 0.0;
    bool converged = false;
    std::vector<double> history;  // stopping quantity per iteration
};

/// |v - (v.n) n|, the shared tangential-magnitude helper; the projection
/// guarantees its post-state measured by this exact function.
double tangential_magnitude(Vec2 v, Vec2 n);

/// Closest point of x in {y : y.n = x.n, |y_t| <= kappa}: keeps the normal
/// component, clips the tangential component to length kappa.
Vec2 project_cone(Vec2 x, Vec2 n, double kappa);

/// Facetwise L2 projection onto the piecewise-constant boundary space of
///   u + alpha2 h_E (lambda - sigma(u,p) n),
/// i.e. the facet mean of the trace plus the facet-constant correction.
MultiplierField project_Mh(const VelocityField& u, const PressureField& p,
                           const MultiplierField& lambda, double mu, double alpha2);

/// One multiplier update step: P(lambda - rho * project_Mh(...)) per facet.
MultiplierField multiplier_update(const VelocityField& u, const PressureField& p,
                                  const MultiplierField& lambda, const ProblemData& data,
                                  double rho, double alpha2);

/// True iff |lambda_t| <= kappa holds on every facet, measured with
/// tangential_magnitude.
bool multiplier_in_cone(const MultiplierField& lambda, const ProblemData& data);

/// Normalised fixed-point residual
///   ||lambda - P(lambda - rho Pi(u + alpha2 h (lambda - sigma n)))||_0
///     / max(||lambda||_0, eps)
/// in the boundary L2 norm; vanishes at the solution for every rho > 0.
double fixed_point_residual(const VelocityField& u, const PressureField& p,
                            const MultiplierField& lambda, const ProblemData& data,
                            double rho, double alpha2);

/// Projection-based Uzawa iteration: update the multiplier by a projected
/// step, re-solve the multiplier-frozen subproblem, stop when the relative
/// boundary-L2 change of the multiplier falls below tol. The subproblem
/// matrix is factored once and reused.
UzawaResult uzawa_solve(const Triangulation& mesh, const SystemSpaces& spaces,
                        const ProblemData& data, const UzawaConfig& config,
                        const std::optional<MixedSolution>& initial = std::nullopt);

}  // namespace slipstokes
