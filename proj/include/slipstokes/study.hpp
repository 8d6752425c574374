#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "slipstokes/friction.hpp"
#include "slipstokes/norms.hpp"
#include "slipstokes/problem.hpp"

namespace slipstokes {

/// Mesh-independent problem parameters; per-level ProblemData instances are
/// built from these.
struct PhysicalParams {
    double mu = 1.0;
    double kappa = 0.3;
    std::function<Vec2(Vec2)> body_force = [](Vec2 x) { return Vec2{-x.y, x.x}; };
    double alpha1 = 0.01;
    double alpha2 = 0.01;
};

struct LevelRecord {
    int level = 0;
    double h_min = 0.0, h_max = 0.0;
    int n_cells = 0;
    int n_velocity = 0, n_pressure = 0, n_multiplier = 0;
    int uzawa_iterations = 0;
    bool converged = true;
    // successive errors against the previous level (NaN on the first row)
    double abs_u = 0.0, abs_p = 0.0, abs_lambda = 0.0;
    double rel_u = 0.0, rel_p = 0.0, rel_lambda = 0.0;
    // log2 ratios of consecutive relative errors (NaN until two pairs exist)
    double rate_u = 0.0, rate_p = 0.0, rate_lambda = 0.0;
};

struct ConvergenceReport {
    std::vector<LevelRecord> levels;

    void write_csv(std::ostream& os) const;
    const LevelRecord& finest() const { return levels.back(); }
};

/// Uniform-refinement study on the square: solves each level (warm-started
/// from the prolonged previous solution), records successive relative errors
/// and rates, and exports per-level fields and boundary traces when
/// `output_dir` is nonempty. Keeps the solved levels alive for inspection.
struct SquareStudyResult {
    ConvergenceReport report;
    std::vector<MixedSolution> solutions;  // one per level; meshes owned below
    std::vector<std::unique_ptr<Triangulation>> meshes;
};

SquareStudyResult run_square_study(int levels, int initial_divisions,
                                   const PhysicalParams& params, const UzawaConfig& config,
                                   const std::string& output_dir = "",
                                   bool export_level_fields = true);

/// One converged solve on the half disk at refinement level `levels`, with
/// field exports and per-facet traces along the arc and the diameter.
struct HalfdiskResult {
    std::unique_ptr<Triangulation> mesh;
    MixedSolution solution;
    int iterations = 0;
    bool converged = false;
    double max_abs_un_arc = 0.0;      // max facet-mean |u.n| over arc facets
    double max_abs_lambda_t = 0.0;    // over all facets
};

HalfdiskResult run_halfdisk_demo(int levels, const PhysicalParams& params,
                                 const UzawaConfig& config,
                                 const std::string& output_dir = "");

/// Smooth reference pair (u*, p*) with analytic derivatives; F = A u* + grad p*.
struct ManufacturedSolution {
    std::function<Vec2(Vec2)> velocity;
    std::function<Mat2(Vec2)> velocity_gradient;
    std::function<double(Vec2)> pressure;
    std::function<Vec2(Vec2)> pressure_gradient;
    std::function<Vec2(Vec2)> body_force;

    Vec2 stress_normal(Vec2 x, Vec2 n, double mu) const {
        return 2.0 * mu * (sym(velocity_gradient(x)) * n) - pressure(x) * n;
    }
};

/// Divergence-free trigonometric field with zero-mean pressure on (-1,1)^2.
ManufacturedSolution trig_solution(double mu);
/// Global linear divergence-free field with zero pressure; P1 reproduces it
/// exactly on straight geometry.
ManufacturedSolution linear_patch_solution(double mu);

/// Multiplier-frozen verification: lambda is fixed at the facet means of
/// sigma(u*, p*) n and only the linear subproblem is solved per level;
/// reports H1/L2 errors against (u*, p*) and their rates.
struct ManufacturedLevelRecord {
    int level = 0;
    double h_max = 0.0;
    double err_u_h1 = 0.0;
    double err_p_l2 = 0.0;
    double rate_u = 0.0;  // NaN on the first row
    double rate_p = 0.0;
};

struct ManufacturedReport {
    std::vector<ManufacturedLevelRecord> levels;
    void write_csv(std::ostream& os) const;
};

ManufacturedReport run_manufactured_linear_check(int levels, int initial_divisions,
                                                 const ManufacturedSolution& exact,
                                                 double mu, double alpha1, double alpha2,
                                                 const std::string& output_dir = "");

/// H1 / L2 errors of a discrete solution against analytic references,
/// integrated with the cell rule.
double error_h1(const VelocityField& u, const std::function<Vec2(Vec2)>& exact,
                const std::function<Mat2(Vec2)>& exact_gradient);
double error_l2(const PressureField& p, const std::function<double(Vec2)>& exact);

/// Facet means of sigma(u*, p*) n, the frozen multiplier of the check.
MultiplierField exact_multiplier(const Triangulation& mesh, const ManufacturedSolution& exact,
                                 double mu);

}  // namespace slipstokes
