#include "slipstokes/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

#include "slipstokes/export.hpp"
#include "slipstokes/quadrature.hpp"

namespace slipstokes {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // normalise the sign of zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_output(const std::string& directory, const std::string& name) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(directory, ec);
    if (ec) throw IoError("study: cannot create directory " + directory);
    std::ofstream os(fs::path(directory) / name);
    if (!os) throw IoError("study: cannot open " + directory + "/" + name);
    return os;
}

void fill_mesh_columns(LevelRecord& rec, const Triangulation& mesh,
                       const SystemSpaces& spaces) {
    rec.n_cells = mesh.cell_count();
    rec.n_velocity = spaces.n_velocity_dofs;
    rec.n_pressure = spaces.n_pressure_dofs;
    rec.n_multiplier = spaces.n_multiplier_dofs;
    const auto [mn, mx] =
        std::minmax_element(mesh.cell_diameters.begin(), mesh.cell_diameters.end());
    rec.h_min = *mn;
    rec.h_max = *mx;
}

}  // namespace

void ConvergenceReport::write_csv(std::ostream& os) const {
    os << "level,h_min,h_max,n_cells,n_velocity,n_pressure,n_multiplier,"
          "uzawa_iterations,converged,abs_err_u_h1,abs_err_p_l2,abs_err_lambda,"
          "rel_err_u_h1,rel_err_p_l2,rel_err_lambda,rate_u,rate_p,rate_lambda\n";
    for (const auto& r : levels) {
        os << r.level << ',' << fmt(r.h_min) << ',' << fmt(r.h_max) << ',' << r.n_cells
           << ',' << r.n_velocity << ',' << r.n_pressure << ',' << r.n_multiplier << ','
           << r.uzawa_iterations << ',' << (r.converged ? 1 : 0) << ',' << fmt(r.abs_u)
           << ',' << fmt(r.abs_p) << ',' << fmt(r.abs_lambda) << ',' << fmt(r.rel_u) << ','
           << fmt(r.rel_p) << ',' << fmt(r.rel_lambda) << ',' << fmt(r.rate_u) << ','
           << fmt(r.rate_p) << ',' << fmt(r.rate_lambda) << '\n';
    }
}

SquareStudyResult run_square_study(int levels, int initial_divisions,
                                   const PhysicalParams& params, const UzawaConfig& config,
                                   const std::string& output_dir,
                                   bool export_level_fields) {
    if (levels < 2) throw std::invalid_argument("run_square_study: levels must be >= 2");
    SquareStudyResult out;
    out.meshes.push_back(
        std::make_unique<Triangulation>(generate_square(initial_divisions)));
    for (int l = 1; l < levels; ++l)
        out.meshes.push_back(std::make_unique<Triangulation>(refine_uniform(*out.meshes[l - 1])));

    for (int l = 0; l < levels; ++l) {
        const Triangulation& mesh = *out.meshes[l];
        const SystemSpaces spaces = make_spaces(mesh);
        const ProblemData data = make_problem_data(mesh, params.mu, params.kappa,
                                                   params.body_force, params.alpha1,
                                                   params.alpha2);
        std::optional<MixedSolution> warm;
        if (l > 0) {
            const MixedSolution& prev = out.solutions[l - 1];
            warm = MixedSolution{prolong_velocity(prev.u, mesh),
                                 prolong_pressure(prev.p, mesh),
                                 prolong_multiplier(prev.lambda, mesh)};
        }
        UzawaResult res = uzawa_solve(mesh, spaces, data, config, warm);

        LevelRecord rec;
        rec.level = l;
        fill_mesh_columns(rec, mesh, spaces);
        rec.uzawa_iterations = res.iterations;
        rec.converged = res.converged;
        rec.abs_u = rec.abs_p = rec.abs_lambda = kNaN;
        rec.rel_u = rec.rel_p = rec.rel_lambda = kNaN;
        rec.rate_u = rec.rate_p = rec.rate_lambda = kNaN;

        out.solutions.push_back(
            MixedSolution{std::move(res.u), std::move(res.p), std::move(res.lambda)});

        if (l > 0) {
            const SuccessiveErrors e = successive_error(out.solutions[l - 1], out.solutions[l]);
            rec.abs_u = e.abs_u;
            rec.abs_p = e.abs_p;
            rec.abs_lambda = e.abs_lambda;
            rec.rel_u = e.rel_u;
            rec.rel_p = e.rel_p;
            rec.rel_lambda = e.rel_lambda;
            if (l > 1) {
                const LevelRecord& prev = out.report.levels[l - 1];
                rec.rate_u = std::log2(prev.rel_u / rec.rel_u);
                rec.rate_p = std::log2(prev.rel_p / rec.rel_p);
                rec.rate_lambda = std::log2(prev.rel_lambda / rec.rel_lambda);
            }
        }
        out.report.levels.push_back(rec);

        if (!output_dir.empty() && export_level_fields)
            export_fields(output_dir + "/level_" + std::to_string(l), mesh,
                          out.solutions[l]);
    }
    if (!output_dir.empty()) {
        auto os = open_output(output_dir, "convergence.csv");
        out.report.write_csv(os);
    }
    return out;
}

HalfdiskResult run_halfdisk_demo(int levels, const PhysicalParams& params,
                                 const UzawaConfig& config, const std::string& output_dir) {
    if (levels < 1) throw std::invalid_argument("run_halfdisk_demo: levels must be >= 1");
    HalfdiskResult out;
    out.mesh = std::make_unique<Triangulation>(generate_halfdisk(levels));
    const Triangulation& mesh = *out.mesh;
    const SystemSpaces spaces = make_spaces(mesh);
    const ProblemData data = make_problem_data(mesh, params.mu, params.kappa,
                                               params.body_force, params.alpha1,
                                               params.alpha2);
    UzawaResult res = uzawa_solve(mesh, spaces, data, config);
    out.iterations = res.iterations;
    out.converged = res.converged;
    out.solution = MixedSolution{std::move(res.u), std::move(res.p), std::move(res.lambda)};

    for (int f = 0; f < mesh.facet_count(); ++f) {
        const auto& bf = mesh.boundary_facets[f];
        const double lt = tangential_magnitude(out.solution.lambda.values[f], bf.normal);
        out.max_abs_lambda_t = std::max(out.max_abs_lambda_t, lt);
        if (bf.tag == tag::arc)
            out.max_abs_un_arc = std::max(
                out.max_abs_un_arc, std::abs(dot(out.solution.u.facet_mean(f), bf.normal)));
    }
    if (!output_dir.empty()) export_fields(output_dir, mesh, out.solution);
    return out;
}

ManufacturedSolution trig_solution(double mu) {
    ManufacturedSolution s;
    s.velocity = [](Vec2 x) {
        return Vec2{std::sin(kPi * x.x) * std::sin(kPi * x.y),
                    std::cos(kPi * x.x) * std::cos(kPi * x.y)};
    };
    s.velocity_gradient = [](Vec2 x) {
        Mat2 g;
        g(0, 0) = kPi * std::cos(kPi * x.x) * std::sin(kPi * x.y);
        g(0, 1) = kPi * std::sin(kPi * x.x) * std::cos(kPi * x.y);
        g(1, 0) = -kPi * std::sin(kPi * x.x) * std::cos(kPi * x.y);
        g(1, 1) = -kPi * std::cos(kPi * x.x) * std::sin(kPi * x.y);
        return g;
    };
    s.pressure = [](Vec2 x) { return std::sin(kPi * x.x) * std::cos(kPi * x.y); };
    s.pressure_gradient = [](Vec2 x) {
        return Vec2{kPi * std::cos(kPi * x.x) * std::cos(kPi * x.y),
                    -kPi * std::sin(kPi * x.x) * std::sin(kPi * x.y)};
    };
    // A u* = u* + 2 mu pi^2 u* for this divergence-free field
    s.body_force = [mu, vel = s.velocity, gp = s.pressure_gradient](Vec2 x) {
        return (1.0 + 2.0 * mu * kPi * kPi) * vel(x) + gp(x);
    };
    return s;
}

ManufacturedSolution linear_patch_solution(double /*mu*/) {
    ManufacturedSolution s;
    const Mat2 grad = [] {
        Mat2 g;
        g(0, 0) = 0.5;
        g(0, 1) = -0.3;
        g(1, 0) = 0.4;
        g(1, 1) = -0.5;  // trace zero: divergence free
        return g;
    }();
    const Vec2 offset{0.2, -0.1};
    s.velocity = [grad, offset](Vec2 x) { return offset + grad * x; };
    s.velocity_gradient = [grad](Vec2) { return grad; };
    s.pressure = [](Vec2) { return 0.0; };
    s.pressure_gradient = [](Vec2) { return Vec2{0.0, 0.0}; };
    // second derivatives vanish, so A u* = u*
    s.body_force = [grad, offset](Vec2 x) { return offset + grad * x; };
    return s;
}

double error_h1(const VelocityField& u, const std::function<Vec2(Vec2)>& exact,
                const std::function<Mat2(Vec2)>& exact_gradient) {
    const Triangulation& mesh = *u.mesh;
    double sum = 0.0;
    for (int c = 0; c < mesh.cell_count(); ++c) {
        const Mat2 gu = u.gradient(c);
        sum += integrate_cell(mesh, c, triangle_rule_degree4(),
                              [&](Vec2 x, const std::array<double, 3>& b) {
                                  const Vec2 du = u.value(c, b) - exact(x);
                                  const Mat2 dg = gu - exact_gradient(x);
                                  return norm_squared(du) + contract(dg, dg);
                              });
    }
    return std::sqrt(sum);
}

double error_l2(const PressureField& p, const std::function<double(Vec2)>& exact) {
    const Triangulation& mesh = *p.mesh;
    double sum = 0.0;
    for (int c = 0; c < mesh.cell_count(); ++c)
        sum += integrate_cell(mesh, c, triangle_rule_degree4(),
                              [&](Vec2 x, const std::array<double, 3>& b) {
                                  const double d = p.value(c, b) - exact(x);
                                  return d * d;
                              });
    return std::sqrt(sum);
}

MultiplierField exact_multiplier(const Triangulation& mesh, const ManufacturedSolution& exact,
                                 double mu) {
    MultiplierField lambda = MultiplierField::zero(mesh);
    const auto& rule = edge_rule_degree3();
    for (int f = 0; f < mesh.facet_count(); ++f) {
        const auto& bf = mesh.boundary_facets[f];
        const Vec2 a = mesh.vertices[bf.endpoints[0]];
        const Vec2 b = mesh.vertices[bf.endpoints[1]];
        Vec2 mean{0.0, 0.0};
        for (std::size_t q = 0; q < rule.points.size(); ++q)
            mean += rule.weights[q] *
                    exact.stress_normal(a + rule.points[q] * (b - a), bf.normal, mu);
        lambda.values[f] = mean;
    }
    return lambda;
}

void ManufacturedReport::write_csv(std::ostream& os) const {
    os << "level,h_max,err_u_h1,err_p_l2,rate_u,rate_p\n";
    for (const auto& r : levels)
        os << r.level << ',' << fmt(r.h_max) << ',' << fmt(r.err_u_h1) << ','
           << fmt(r.err_p_l2) << ',' << fmt(r.rate_u) << ',' << fmt(r.rate_p) << '\n';
}

ManufacturedReport run_manufactured_linear_check(int levels, int initial_divisions,
                                                 const ManufacturedSolution& exact,
                                                 double mu, double alpha1, double alpha2,
                                                 const std::string& output_dir) {
    if (levels < 1)
        throw std::invalid_argument("run_manufactured_linear_check: levels must be >= 1");
    ManufacturedReport report;
    std::unique_ptr<Triangulation> mesh =
        std::make_unique<Triangulation>(generate_square(initial_divisions));
    for (int l = 0; l < levels; ++l) {
        if (l > 0) mesh = std::make_unique<Triangulation>(refine_uniform(*mesh));
        const SystemSpaces spaces = make_spaces(*mesh);
        const ProblemData data =
            make_problem_data(*mesh, mu, 1.0, exact.body_force, alpha1, alpha2);
        const MultiplierField lambda = exact_multiplier(*mesh, exact, mu);
        const SaddleSystem system = assemble_system(*mesh, spaces, data, lambda);
        const MixedSolution sol = solve_subproblem(*mesh, spaces, system, lambda);

        ManufacturedLevelRecord rec;
        rec.level = l;
        rec.h_max = *std::max_element(mesh->cell_diameters.begin(), mesh->cell_diameters.end());
        rec.err_u_h1 = error_h1(sol.u, exact.velocity, exact.velocity_gradient);
        rec.err_p_l2 = error_l2(sol.p, exact.pressure);
        rec.rate_u = rec.rate_p = kNaN;
        if (l > 0) {
            rec.rate_u = std::log2(report.levels.back().err_u_h1 / rec.err_u_h1);
            rec.rate_p = std::log2(report.levels.back().err_p_l2 / rec.err_p_l2);
        }
        report.levels.push_back(rec);
    }
    if (!output_dir.empty()) {
        auto os = open_output(output_dir, "manufactured.csv");
        report.write_csv(os);
    }
    return report;
}

}  // namespace slipstokes
