#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slipstokes/export.hpp"
#include "slipstokes/friction.hpp"
#include "slipstokes/run_config.hpp"
#include "slipstokes/study.hpp"

namespace {

using namespace slipstokes;

PhysicalParams params_from(const RunConfig& cfg) {
    PhysicalParams p;
    p.mu = cfg.mu;
    p.kappa = cfg.kappa;
    p.alpha1 = cfg.alpha1;
    p.alpha2 = cfg.alpha2;
    // rotational load of the reference experiments
    p.body_force = [](Vec2 x) { return Vec2{-x.y, x.x}; };
    return p;
}

UzawaConfig uzawa_from(const RunConfig& cfg) {
    UzawaConfig u;
    u.rho = cfg.rho;
    u.tol = cfg.tol;
    u.max_iterations = cfg.max_iterations;
    u.alpha2 = cfg.alpha2;
    return u;
}

int run_solve(const RunConfig& cfg) {
    Triangulation mesh;
    if (!cfg.mesh_file.empty()) {
        std::ifstream is(cfg.mesh_file);
        if (!is) throw IoError("cannot open mesh file " + cfg.mesh_file);
        mesh = read_mesh_text(is);
    } else {
        mesh = generate_square(cfg.divisions);
    }
    const SystemSpaces spaces = make_spaces(mesh);
    const PhysicalParams params = params_from(cfg);
    const ProblemData data = make_problem_data(mesh, params.mu, params.kappa,
                                               params.body_force, params.alpha1,
                                               params.alpha2);
    const UzawaResult res = uzawa_solve(mesh, spaces, data, uzawa_from(cfg));
    std::printf("solve: %d cells, %d dofs, %d iterations, final change %.3e, %s\n",
                mesh.cell_count(), spaces.total_size(), res.iterations, res.final_change,
                res.converged ? "converged" : "NOT converged");
    if (cfg.export_fields)
        export_fields(cfg.output_dir, mesh, MixedSolution{res.u, res.p, res.lambda});
    return res.converged ? exit_code::ok : exit_code::no_convergence;
}

int run_converge(const RunConfig& cfg) {
    const SquareStudyResult study =
        run_square_study(cfg.levels, cfg.divisions, params_from(cfg), uzawa_from(cfg),
                         cfg.output_dir, cfg.export_fields);
    bool all_converged = true;
    std::printf("level  h_max      iters  rel_err_u    rel_err_p    rel_err_lam  rate_u rate_p rate_lam\n");
    for (const auto& r : study.report.levels) {
        std::printf("%-6d %-10.4g %-6d %-12.5g %-12.5g %-12.5g %-6.3g %-6.3g %-6.3g\n",
                    r.level, r.h_max, r.uzawa_iterations, r.rel_u, r.rel_p, r.rel_lambda,
                    r.rate_u, r.rate_p, r.rate_lambda);
        all_converged = all_converged && r.converged;
    }
    return all_converged ? exit_code::ok : exit_code::no_convergence;
}

int run_halfdisk(const RunConfig& cfg) {
    const HalfdiskResult res = run_halfdisk_demo(
        cfg.levels, params_from(cfg), uzawa_from(cfg),
        cfg.export_fields ? cfg.output_dir : std::string());
    std::printf("halfdisk: level %d, %d cells, %d iterations, %s\n", cfg.levels,
                res.mesh->cell_count(), res.iterations,
                res.converged ? "converged" : "NOT converged");
    std::printf("  max |lambda_t| = %.6g, max arc facet-mean |u.n| = %.6g\n",
                res.max_abs_lambda_t, res.max_abs_un_arc);
    return res.converged ? exit_code::ok : exit_code::no_convergence;
}

int run_manufactured(const RunConfig& cfg) {
    const ManufacturedReport report = run_manufactured_linear_check(
        cfg.levels, cfg.divisions, trig_solution(cfg.mu), cfg.mu, cfg.alpha1, cfg.alpha2,
        cfg.output_dir);
    std::printf("level  h_max      err_u_h1     err_p_l2     rate_u rate_p\n");
    for (const auto& r : report.levels)
        std::printf("%-6d %-10.4g %-12.5g %-12.5g %-6.3g %-6.3g\n", r.level, r.h_max,
                    r.err_u_h1, r.err_p_l2, r.rate_u, r.rate_p);
    return exit_code::ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const RunConfig cfg = parse_config(args);
        if (cfg.command == "solve") return run_solve(cfg);
        if (cfg.command == "converge") return run_converge(cfg);
        if (cfg.command == "halfdisk") return run_halfdisk(cfg);
        return run_manufactured(cfg);
    } catch (const CLI::CallForHelp& e) {
        std::cout << e.what() << "\n";
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_code::config_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_code::config_error;
    } catch (const slipstokes::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return exit_code::io_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::no_convergence;
    }
}
