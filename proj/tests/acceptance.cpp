// Acceptance suite: runs the reference experiments end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "slipstokes/export.hpp"
#include "slipstokes/friction.hpp"
#include "slipstokes/norms.hpp"
#include "slipstokes/study.hpp"

using namespace slipstokes;

namespace {

Vec2 rotational_load(Vec2 x) { return {-x.y, x.x}; }

struct SolveRecord {
    std::string name;
    const Triangulation* mesh = nullptr;
    ProblemData data;
    const MixedSolution* solution = nullptr;
    double rho = 0.4;
    double alpha2 = 0.01;
    double tol = 1e-5;
    bool converged = false;
};

struct Context {
    // criterion 1-3: the reference square study
    SquareStudyResult study;
    std::vector<ProblemData> study_data;

    // criterion 4: stick-limit chain
    std::unique_ptr<Triangulation> stick_mesh;
    MixedSolution stick_solution;
    bool stick_converged = false;
    double stick_ratio = 0.0;
    double stick_tol = 1e-6;

    // criterion 9: half-disk sweep
    std::vector<HalfdiskResult> halfdisk;
    std::vector<ProblemData> halfdisk_data;
    double halfdisk_tol = 1e-6;

    std::vector<SolveRecord> solves;  // every converged solve, for criterion 2
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void run_square_levels(Context& ctx) {
    const auto t0 = std::chrono::steady_clock::now();
    std::fprintf(stderr, "running square study (5 levels from divisions 4)...\n");
    PhysicalParams params;  // kappa 0.3, mu 1, F = (-y, x), alpha 0.01
    UzawaConfig config;     // rho 0.4, tol 1e-5
    ctx.study = run_square_study(5, 4, params, config);
    for (std::size_t l = 0; l < ctx.study.meshes.size(); ++l) {
        const Triangulation& mesh = *ctx.study.meshes[l];
        ctx.study_data.push_back(make_problem_data(mesh, params.mu, params.kappa,
                                                   params.body_force, params.alpha1,
                                                   params.alpha2));
        ctx.solves.push_back({"square level " + std::to_string(l), &mesh,
                              ctx.study_data.back(), &ctx.study.solutions[l], config.rho,
                              config.alpha2, config.tol,
                              ctx.study.report.levels[l].converged});
    }
    std::fprintf(stderr, "  done in %.1f s\n", seconds_since(t0));
}

void run_stick_chain(Context& ctx) {
    const auto t0 = std::chrono::steady_clock::now();
    std::fprintf(stderr, "running stick-limit chain (kappa = 1e6, divisions 32 -> 128)...\n");
    UzawaConfig config;
    config.tol = ctx.stick_tol;
    config.max_iterations = 40000;

    std::string iteration_counts;
    std::unique_ptr<Triangulation> coarse;
    std::optional<MixedSolution> warm;
    MixedSolution prev;
    for (int level = 0; level < 3; ++level) {
        auto mesh = std::make_unique<Triangulation>(
            coarse ? refine_uniform(*coarse) : generate_square(32));
        const SystemSpaces spaces = make_spaces(*mesh);
        const ProblemData data =
            make_problem_data(*mesh, 1.0, 1e6, rotational_load, 0.01, 0.01);
        if (coarse) {
            warm = MixedSolution{prolong_velocity(prev.u, *mesh),
                                 prolong_pressure(prev.p, *mesh),
                                 prolong_multiplier(prev.lambda, *mesh)};
        }
        UzawaResult res = uzawa_solve(*mesh, spaces, data, config, warm);
        iteration_counts += (level ? ", " : "") + std::to_string(res.iterations);
        prev = MixedSolution{std::move(res.u), std::move(res.p), std::move(res.lambda)};
        ctx.stick_converged = res.converged;
        coarse = std::move(mesh);
        if (!res.converged) break;
    }
    ctx.stick_mesh = std::move(coarse);
    ctx.stick_solution = std::move(prev);

    const Triangulation& mesh = *ctx.stick_mesh;
    double max_ut = 0.0, max_u = 0.0;
    for (int f = 0; f < mesh.facet_count(); ++f) {
        const Vec2 um = ctx.stick_solution.u.facet_mean(f);
        max_ut = std::max(max_ut,
                          std::abs(dot(um, perp(mesh.boundary_facets[f].normal))));
    }
    for (int v = 0; v < mesh.vertex_count(); ++v)
        max_u = std::max(max_u, norm(ctx.stick_solution.u.at_vertex(v)));
    ctx.stick_ratio = max_ut / max_u;

    std::fprintf(stderr, "  done in %.1f s (iterations per level: %s)\n",
                 seconds_since(t0), iteration_counts.c_str());
    ctx.solves.push_back({"stick divisions 128", ctx.stick_mesh.get(),
                          make_problem_data(mesh, 1.0, 1e6, rotational_load, 0.01, 0.01),
                          &ctx.stick_solution, config.rho, config.alpha2, config.tol,
                          ctx.stick_converged});
}

void run_halfdisk_levels(Context& ctx) {
    const auto t0 = std::chrono::steady_clock::now();
    std::fprintf(stderr, "running half-disk sweep (levels 2, 3, 4)...\n");
    PhysicalParams params;
    params.kappa = 0.1;
    UzawaConfig config;
    config.rho = 0.1;
    config.tol = ctx.halfdisk_tol;
    config.max_iterations = 40000;
    ctx.halfdisk.reserve(3);
    ctx.halfdisk_data.reserve(3);
    for (const int level : {2, 3, 4}) {
        ctx.halfdisk.push_back(run_halfdisk_demo(level, params, config));
        const HalfdiskResult& res = ctx.halfdisk.back();
        ctx.halfdisk_data.push_back(make_problem_data(*res.mesh, params.mu, params.kappa,
                                                      params.body_force, params.alpha1,
                                                      params.alpha2));
        ctx.solves.push_back({"halfdisk level " + std::to_string(level), res.mesh.get(),
                              ctx.halfdisk_data.back(), &res.solution, config.rho,
                              config.alpha2, config.tol, res.converged});
    }
    std::fprintf(stderr, "  done in %.1f s\n", seconds_since(t0));
}

// ---------------------------------------------------------------------------
// independent helpers for criteria 5 and 6 (duplicated on purpose from the
// unit oracles so this binary stands alone)

Vec2 p1_gradient(const Triangulation& mesh, int cell, const double values[3]) {
    const auto& t = mesh.cells[cell];
    const Vec2 e1 = mesh.vertices[t[1]] - mesh.vertices[t[0]];
    const Vec2 e2 = mesh.vertices[t[2]] - mesh.vertices[t[0]];
    const double d1 = values[1] - values[0];
    const double d2 = values[2] - values[0];
    const double det = e1.x * e2.y - e1.y * e2.x;
    return {(d1 * e2.y - d2 * e1.y) / det, (e1.x * d2 - e2.x * d1) / det};
}

Mat2 p1_velocity_gradient(const Triangulation& mesh, int cell, const VelocityField& u) {
    const auto& t = mesh.cells[cell];
    const double ux[3] = {u.at_vertex(t[0]).x, u.at_vertex(t[1]).x, u.at_vertex(t[2]).x};
    const double uy[3] = {u.at_vertex(t[0]).y, u.at_vertex(t[1]).y, u.at_vertex(t[2]).y};
    const Vec2 gx = p1_gradient(mesh, cell, ux);
    const Vec2 gy = p1_gradient(mesh, cell, uy);
    Mat2 g;
    g(0, 0) = gx.x;
    g(0, 1) = gx.y;
    g(1, 0) = gy.x;
    g(1, 1) = gy.y;
    return g;
}

Vec2 oracle_sigma_n(const Triangulation& mesh, int facet, const VelocityField& u,
                    const PressureField& p, double mu, Vec2 x) {
    const auto& bf = mesh.boundary_facets[facet];
    const Mat2 d = sym(p1_velocity_gradient(mesh, bf.cell, u));
    const auto b = oracle::barycentric(mesh, bf.cell, x);
    return 2.0 * mu * (d * bf.normal) - p.value(bf.cell, b) * bf.normal;
}

// ---------------------------------------------------------------------------

using CriterionFn = std::function<bool(const Context&, std::string&)>;

bool criterion_1(const Context& ctx, std::string& detail) {
    const auto& levels = ctx.study.report.levels;
    bool all_converged = true;
    for (const auto& r : levels) all_converged = all_converged && r.converged;
    const LevelRecord& finest = levels.back();
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "finest-pair rates: u %.3f, p %.3f, lambda %.3f; all levels converged: %s",
                  finest.rate_u, finest.rate_p, finest.rate_lambda,
                  all_converged ? "yes" : "NO");
    detail = buf;
    return all_converged && finest.rate_u >= 0.8 && finest.rate_u <= 1.3 &&
           finest.rate_p >= 0.8 && finest.rate_p <= 1.3 && finest.rate_lambda >= 1.0;
}

bool criterion_2(const Context& ctx, std::string& detail) {
    double worst_residual = 0.0;
    bool feasible = true, converged = true;
    for (const auto& s : ctx.solves) {
        converged = converged && s.converged;
        if (!multiplier_in_cone(s.solution->lambda, s.data)) {
            feasible = false;
            detail = "cone violated at " + s.name;
        }
        const double r = fixed_point_residual(s.solution->u, s.solution->p,
                                              s.solution->lambda, s.data, s.rho, s.alpha2);
        if (!(r < 2.0 * s.tol)) {
            detail = "fixed-point residual " + std::to_string(r) + " at " + s.name;
            return false;
        }
        worst_residual = std::max(worst_residual, r / s.tol);
    }
    if (!feasible || !converged) return false;
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "%zu solves; |lambda_t| <= kappa on every facet; worst residual %.2f x tol",
                  ctx.solves.size(), worst_residual);
    detail = buf;
    return true;
}

bool criterion_3(const Context& ctx, std::string& detail) {
    const Triangulation& mesh = *ctx.study.meshes.back();
    const MixedSolution& sol = ctx.study.solutions.back();
    const ProblemData& data = ctx.study_data.back();
    int sides_with_both = 0;
    for (int side = 0; side < 4; ++side) {
        bool slip = false, stick = false;
        for (int f = 0; f < mesh.facet_count(); ++f) {
            const auto& bf = mesh.boundary_facets[f];
            if (bf.tag != side) continue;
            const double lt = tangential_magnitude(sol.lambda.values[f], bf.normal);
            if (lt >= data.kappa[f] * (1.0 - 1e-12)) slip = true;
            if (lt < data.kappa[f] * (1.0 - 1e-6)) stick = true;
        }
        if (slip && stick) ++sides_with_both;
    }
    detail = std::to_string(sides_with_both) + " of 4 sides show both slip and stick facets";
    return sides_with_both == 4;
}

bool criterion_4(const Context& ctx, std::string& detail) {
    char buf[120];
    std::snprintf(buf, sizeof buf, "max facet-mean |u_t| / max nodal |u| = %.3e (bound 1e-4)",
                  ctx.stick_ratio);
    detail = buf;
    return ctx.stick_converged && ctx.stick_ratio <= 1e-4;
}

bool criterion_5(const Context&, std::string& detail) {
    const Triangulation mesh = generate_square(3);
    const ProblemData data = make_problem_data(mesh, 1.0, 0.3, rotational_load, 0.01, 0.01);
    auto gen = oracle::rng(314159);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const VelocityField w = oracle::random_velocity(mesh, gen);
        const PressureField r = oracle::random_pressure(mesh, gen);
        const MultiplierField chi = oracle::random_multiplier(mesh, gen);
        MultiplierField minus_chi = chi;
        for (auto& x : minus_chi.values) x = -1.0 * x;

        const double lhs = evaluate_Bh(mesh, data, w, r, chi, w, r, minus_chi);
        if (!(lhs > 0.0)) {
            detail = "form value not strictly positive";
            return false;
        }

        double af = 0.0, s1w = 0.0, s2sig = 0.0, s1r = 0.0, s2chi = 0.0;
        for (int c = 0; c < mesh.cell_count(); ++c) {
            const double h2 = mesh.cell_diameters[c] * mesh.cell_diameters[c];
            const Mat2 dw = sym(p1_velocity_gradient(mesh, c, w));
            const double mass = oracle::integrate_cell(
                mesh, c, [&](Vec2, const std::array<double, 3>& b) {
                    return norm_squared(w.value(c, b));
                });
            af += mass + 2.0 * data.mu * contract(dw, dw) * mesh.cell_area(c);
            s1w += h2 * mass;
            s1r += h2 * norm_squared(r.gradient(c)) * mesh.cell_area(c);
        }
        for (int f = 0; f < mesh.facet_count(); ++f) {
            const double he = mesh.boundary_facets[f].length;
            s2sig += he * oracle::integrate_facet(mesh, f, [&](Vec2 x, double) {
                return norm_squared(oracle_sigma_n(mesh, f, w, r, data.mu, x));
            });
            s2chi += he * he * norm_squared(chi.values[f]);
        }
        const double rhs = af - data.alpha1 * s1w - data.alpha2 * s2sig +
                           data.alpha1 * s1r + data.alpha2 * s2chi;
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    char buf[100];
    std::snprintf(buf, sizeof buf, "100 random triples, worst relative mismatch %.2e", worst);
    detail = buf;
    return worst <= 1e-10;
}

bool criterion_6(const Context&, std::string& detail) {
    const Triangulation mesh = generate_square(1);  // 2-cell mesh
    const SystemSpaces spaces = make_spaces(mesh);
    auto gen = oracle::rng(2024);
    const VelocityField u = oracle::random_velocity(mesh, gen);
    const PressureField p = oracle::random_pressure(mesh, gen);
    const VelocityField v = oracle::random_velocity(mesh, gen);
    const PressureField q = oracle::random_pressure(mesh, gen);
    const MultiplierField lambda = oracle::random_multiplier(mesh, gen);

    const auto pack = [&](const VelocityField& a, const PressureField& b) {
        std::vector<double> x(spaces.total_size(), 0.0);
        for (int i = 0; i < spaces.n_velocity_dofs; ++i) x[i] = a.values[i];
        for (int i = 0; i < spaces.n_pressure_dofs; ++i)
            x[spaces.pressure_offset + i] = b.values[i];
        return x;
    };
    const auto contract_with = [&](const SparseMatrix& m, const std::vector<double>& y,
                                   const std::vector<double>& x) {
        const std::vector<double> ax = m.multiply(x);
        double s = 0.0;
        for (std::size_t i = 0; i < ax.size(); ++i) s += y[i] * ax[i];
        return s;
    };
    const std::vector<double> x = pack(u, p);
    const std::vector<double> y = pack(v, q);

    const auto data_a = [&](double a1, double a2) {
        return make_problem_data(mesh, 1.0, 0.3, rotational_load, a1, a2);
    };
    const SparseMatrix base = assemble_lhs(mesh, spaces, data_a(0.0, 0.0));

    double worst = 0.0;
    // S1 block
    {
        const double a1 = 0.03;
        double s1 = 0.0;
        for (int c = 0; c < mesh.cell_count(); ++c) {
            const double h2 = mesh.cell_diameters[c] * mesh.cell_diameters[c];
            const Vec2 gp = p.gradient(c);
            const Vec2 gq = q.gradient(c);
            s1 += h2 * oracle::integrate_cell(mesh, c,
                                              [&](Vec2, const std::array<double, 3>& b) {
                                                  return dot(u.value(c, b) + gp,
                                                             v.value(c, b) - gq);
                                              });
        }
        const SparseMatrix m = assemble_lhs(mesh, spaces, data_a(a1, 0.0));
        worst = std::max(worst,
                         std::abs(contract_with(m, y, x) - contract_with(base, y, x) + a1 * s1));
    }
    // S2 block
    {
        const double a2 = 0.04;
        double s2 = 0.0;
        for (int f = 0; f < mesh.facet_count(); ++f) {
            const double he = mesh.boundary_facets[f].length;
            s2 += he * oracle::integrate_facet(mesh, f, [&](Vec2 xx, double) {
                return dot(oracle_sigma_n(mesh, f, u, p, 1.0, xx),
                           oracle_sigma_n(mesh, f, v, q, 1.0, xx));
            });
        }
        const SparseMatrix m = assemble_lhs(mesh, spaces, data_a(0.0, a2));
        worst = std::max(worst,
                         std::abs(contract_with(m, y, x) - contract_with(base, y, x) + a2 * s2));
    }
    // load block
    {
        const ProblemData data = data_a(0.01, 0.0);
        const std::vector<double> rhs = assemble_rhs_load(mesh, spaces, data);
        double expected = 0.0;
        for (int c = 0; c < mesh.cell_count(); ++c) {
            const double h2 = mesh.cell_diameters[c] * mesh.cell_diameters[c];
            const Vec2 gq = q.gradient(c);
            expected +=
                oracle::integrate_cell(mesh, c, [&](Vec2 xx, const std::array<double, 3>& b) {
                    const Vec2 f = rotational_load(xx);
                    return dot(f, v.value(c, b)) -
                           data.alpha1 * h2 * (dot(f, v.value(c, b)) - dot(f, gq));
                });
        }
        double got = 0.0;
        for (std::size_t i = 0; i < rhs.size(); ++i) got += y[i] * rhs[i];
        worst = std::max(worst, std::abs(got - expected));
    }
    // boundary block
    {
        const ProblemData data = data_a(0.01, 0.01);
        std::vector<double> rhs(spaces.total_size(), 0.0);
        add_rhs_boundary_terms(rhs, mesh, spaces, data, lambda);
        double expected = 0.0;
        for (int f = 0; f < mesh.facet_count(); ++f) {
            const auto& bf = mesh.boundary_facets[f];
            const Vec2 lam = lambda.values[f];
            expected += oracle::integrate_facet(mesh, f, [&](Vec2 xx, double) {
                const auto b = oracle::barycentric(mesh, bf.cell, xx);
                return dot(lam, v.value(bf.cell, b)) -
                       data.alpha2 * bf.length *
                           dot(lam, oracle_sigma_n(mesh, f, v, q, data.mu, xx));
            });
        }
        double got = 0.0;
        for (std::size_t i = 0; i < rhs.size(); ++i) got += y[i] * rhs[i];
        worst = std::max(worst, std::abs(got - expected));
    }
    char buf[100];
    std::snprintf(buf, sizeof buf, "worst absolute block mismatch %.2e (bound 1e-12)", worst);
    detail = buf;
    return worst <= 1e-12;
}

bool criterion_7(const Context&, std::string& detail) {
    const ManufacturedReport report =
        run_manufactured_linear_check(4, 4, trig_solution(1.0), 1.0, 0.01, 0.01);
    const auto& finest = report.levels.back();

    const ManufacturedSolution patch = linear_patch_solution(1.0);
    const Triangulation mesh = generate_square(4);
    const SystemSpaces spaces = make_spaces(mesh);
    const ProblemData data = make_problem_data(mesh, 1.0, 1.0, patch.body_force, 0.01, 0.01);
    const MultiplierField lambda = exact_multiplier(mesh, patch, 1.0);
    const MixedSolution sol =
        solve_subproblem(mesh, spaces, assemble_system(mesh, spaces, data, lambda), lambda);
    double patch_err = 0.0;
    for (int v = 0; v < mesh.vertex_count(); ++v) {
        patch_err = std::max(patch_err,
                             norm(sol.u.at_vertex(v) - patch.velocity(mesh.vertices[v])));
        patch_err = std::max(patch_err, std::abs(sol.p.values[v]));
    }
    char buf[140];
    std::snprintf(buf, sizeof buf, "rates u %.3f, p %.3f over 4 levels; patch error %.2e",
                  finest.rate_u, finest.rate_p, patch_err);
    detail = buf;
    return finest.rate_u >= 0.9 && finest.rate_p >= 0.9 && patch_err <= 1e-8;
}

bool criterion_8(const Context&, std::string& detail) {
    auto gen = oracle::rng(6021);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::uniform_real_distribution<double> thresh(1e-3, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);

    double worst_gap = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const double a = angle(gen);
        const Vec2 n{std::cos(a), std::sin(a)};
        const Vec2 x{coord(gen), coord(gen)};
        const double kappa = thresh(gen);
        const Vec2 px = project_cone(x, n, kappa);

        if (tangential_magnitude(px, n) > kappa) {
            detail = "tangential bound violated";
            return false;
        }
        const Vec2 ppx = project_cone(px, n, kappa);
        if (ppx.x != px.x || ppx.y != px.y) {
            detail = "projection not idempotent";
            return false;
        }
        if (std::abs(dot(px, n) - dot(x, n)) > 1e-13 * std::max(1.0, norm(x))) {
            detail = "normal component not preserved";
            return false;
        }
        // dense nearest-point search on the feasible segment
        const Vec2 t = perp(n);
        const Vec2 base = dot(x, n) * n;
        double best = 1e300;
        const int samples = 20001;
        for (int i = 0; i < samples; ++i) {
            const double s = -kappa + 2.0 * kappa * i / (samples - 1);
            best = std::min(best, norm(base + s * t - x));
        }
        worst_gap = std::max(worst_gap, norm(px - x) - best);
    }
    char buf[100];
    std::snprintf(buf, sizeof buf,
                  "1000 samples; worst distance excess over dense search %.2e", worst_gap);
    detail = buf;
    return worst_gap <= 1e-6;
}

bool criterion_9(const Context& ctx, std::string& detail) {
    bool ok = true;
    std::string traces;
    double prev = 1e300;
    for (std::size_t i = 0; i < ctx.halfdisk.size(); ++i) {
        const HalfdiskResult& res = ctx.halfdisk[i];
        ok = ok && res.converged;
        ok = ok && multiplier_in_cone(res.solution.lambda, ctx.halfdisk_data[i]);
        ok = ok && res.max_abs_lambda_t <= 0.1;
        ok = ok && res.max_abs_un_arc < prev;
        prev = res.max_abs_un_arc;
        char buf[40];
        std::snprintf(buf, sizeof buf, "%s%.3e", i ? " -> " : "", res.max_abs_un_arc);
        traces += buf;
    }
    detail = "max arc facet-mean |u.n|: " + traces;
    return ok && ctx.halfdisk.size() == 3;
}

bool criterion_10(const Context&, std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "slipstokes_acceptance_det";
    fs::remove_all(base);

    const auto run_once = [&](const fs::path& dir) {
        const Triangulation mesh = generate_square(8);
        const SystemSpaces spaces = make_spaces(mesh);
        const ProblemData data = make_problem_data(mesh, 1.0, 0.3, rotational_load, 0.01, 0.01);
        const UzawaConfig config;
        const UzawaResult res = uzawa_solve(mesh, spaces, data, config);
        export_fields(dir.string(), mesh, MixedSolution{res.u, res.p, res.lambda});
    };
    run_once(base / "a");
    run_once(base / "b");

    const auto slurp = [](const fs::path& p) {
        std::ifstream is(p, std::ios::binary);
        std::stringstream ss;
        ss << is.rdbuf();
        return ss.str();
    };
    for (const char* name : {"fields.vtk", "boundary.csv", "mesh.txt"}) {
        if (slurp(base / "a" / name) != slurp(base / "b" / name)) {
            detail = std::string(name) + " differs between identical runs";
            return false;
        }
    }
    fs::remove_all(base);
    detail = "repeated runs byte-identical (fields.vtk, boundary.csv, mesh.txt)";
    return true;
}

}  // namespace

int main() {
    Context ctx;
    run_square_levels(ctx);
    run_stick_chain(ctx);
    run_halfdisk_levels(ctx);

    struct Criterion {
        int id;
        const char* title;
        CriterionFn fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "square convergence study: rates in band, all levels converge", criterion_1},
        {2, "cone feasibility and fixed-point residual at every converged solve", criterion_2},
        {3, "slip and stick regions on every side of the finest square level", criterion_3},
        {4, "stick limit at kappa = 1e6", criterion_4},
        {5, "coercivity identity of the stabilised form", criterion_5},
        {6, "assembly blocks against brute-force quadrature", criterion_6},
        {7, "manufactured multiplier-frozen study and linear patch test", criterion_7},
        {8, "cone projection properties and nearest-point oracle", criterion_8},
        {9, "half-disk demo: feasibility and impermeability under refinement", criterion_9},
        {10, "deterministic outputs", criterion_10},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(ctx, detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s — %s\n", ok ? "PASS" : "FAIL", c.id, c.title,
                    detail.c_str());
        if (!ok) ++failed;
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
