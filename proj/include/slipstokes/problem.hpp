#pragma once

#include <functional>
#include <vector>

#include "slipstokes/mesh.hpp"
#include "slipstokes/vec2.hpp"

namespace slipstokes {

/// Upper bound accepted for the stabilisation parameters; keeps them well
/// inside the regime where the stabilised form stays coercive on the mesh
/// families used here.
inline constexpr double kMaxStabilisation = 0.1;

/// Physical and numerical data of one problem instance on one mesh. The
/// friction threshold is one constant per boundary facet, inherited by facet
/// children under refinement.
struct ProblemData {
    double mu = 1.0;
    std::vector<double> kappa;
    std::function<Vec2(Vec2)> body_force;
    double alpha1 = 0.01;
    double alpha2 = 0.01;

    /// Throws std::invalid_argument naming the violated constraint.
    void validate(const Triangulation& mesh) const;
};

ProblemData make_problem_data(const Triangulation& mesh, double mu, double kappa,
                              std::function<Vec2(Vec2)> body_force, double alpha1 = 0.01,
                              double alpha2 = 0.01);

/// Same problem on the refined mesh; kappa values follow the facet parents.
ProblemData inherit_problem_data(const ProblemData& coarse, const Triangulation& fine_mesh);

}  // namespace slipstokes
