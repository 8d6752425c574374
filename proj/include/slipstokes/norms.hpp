#pragma once

#include "slipstokes/backend.hpp"
#include "slipstokes/spaces.hpp"

namespace slipstokes {

/// (sum_T int_T |f|^2)^{1/2}, exact quadrature for P1.
double norm_l2(const PressureField& f, Backend backend = Backend::openmp);
double norm_l2(const VelocityField& f, Backend backend = Backend::openmp);

/// (sum_T int_T |f|^2 + |grad f|^2)^{1/2}.
double norm_h1(const PressureField& f, Backend backend = Backend::openmp);
double norm_h1(const VelocityField& f, Backend backend = Backend::openmp);

/// Mesh-weighted multiplier surrogate (sum_E h_E ||chi||_{0,E}^2)^{1/2},
/// which is (sum_E h_E^2 |chi_E|^2)^{1/2} for facet constants.
double norm_multiplier(const MultiplierField& chi);

/// Boundary L2 norm (sum_E h_E |chi_E|^2)^{1/2}; the Uzawa stopping norm.
double boundary_l2_norm(const MultiplierField& chi);

/// (f, 1) over the mesh.
double field_integral(const PressureField& f);

struct SuccessiveErrors {
    double abs_u = 0.0, abs_p = 0.0, abs_lambda = 0.0;
    double rel_u = 0.0, rel_p = 0.0, rel_lambda = 0.0;
};

/// Successive-mesh errors: the coarse solution is prolonged to the fine mesh
/// and the differences are measured there (H1 velocity, L2 pressure,
/// multiplier surrogate), normalised by the fine solution's norms.
SuccessiveErrors successive_error(const MixedSolution& coarse, const MixedSolution& fine);

}  // namespace slipstokes
