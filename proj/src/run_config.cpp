#include "slipstokes/run_config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

namespace slipstokes {

void RunConfig::validate() const {
    if (command != "solve" && command != "converge" && command != "halfdisk" &&
        command != "manufactured")
        throw std::invalid_argument("unknown command '" + command + "'");
    if (divisions < 1) throw std::invalid_argument("divisions must be >= 1");
    if (command == "converge" && levels < 2)
        throw std::invalid_argument("converge requires levels >= 2");
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
    if (!(alpha1 > 0.0)) throw std::invalid_argument("alpha1 must be > 0");
    if (!(alpha2 > 0.0)) throw std::invalid_argument("alpha2 must be > 0");
    if (alpha1 > 0.1 || alpha2 > 0.1)
        throw std::invalid_argument("alpha1 and alpha2 must be <= 0.1");
    if (!(rho > 0.0)) throw std::invalid_argument("rho must be > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (output_dir.empty()) throw std::invalid_argument("output_dir must not be empty");
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

/// Expands "--config FILE" into "--key=value" tokens in place; the key=value
/// lines go through the same option machinery as command-line flags, so
/// unknown keys are rejected by name.
std::vector<std::string> expand_config_files(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string file;
        if (args[i] == "--config") {
            if (i + 1 >= args.size())
                throw std::invalid_argument("--config requires a file argument");
            file = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            file = args[i].substr(9);
        } else {
            out.push_back(args[i]);
            continue;
        }
        std::ifstream is(file);
        if (!is) throw std::invalid_argument("cannot open config file " + file);
        std::string line;
        int lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            const std::string stripped = trim(line);
            if (stripped.empty() || stripped[0] == '#') continue;
            const auto eq = stripped.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument(file + ":" + std::to_string(lineno) +
                                            ": expected key=value, got '" + stripped + "'");
            out.push_back("--" + trim(stripped.substr(0, eq)) + "=" +
                          trim(stripped.substr(eq + 1)));
        }
    }
    return out;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"Stabilised Stokes solver with a friction-type slip boundary condition"};
    app.require_subcommand(1);

    struct SubHandles {
        CLI::App* sub = nullptr;
        CLI::Option* kappa = nullptr;
        CLI::Option* rho = nullptr;
        CLI::Option* levels = nullptr;
    };
    std::vector<SubHandles> handles;

    const auto add_common = [&](CLI::App* sub) {
        SubHandles h;
        h.sub = sub;
        sub->add_option("--mu", cfg.mu, "kinematic viscosity")->capture_default_str();
        h.kappa = sub->add_option("--kappa", cfg.kappa, "friction threshold")
                      ->capture_default_str();
        sub->add_option("--alpha1", cfg.alpha1, "interior stabilisation parameter")
            ->capture_default_str();
        sub->add_option("--alpha2", cfg.alpha2, "boundary stabilisation parameter")
            ->capture_default_str();
        h.rho = sub->add_option("--rho", cfg.rho, "Uzawa step parameter")
                    ->capture_default_str();
        sub->add_option("--tol", cfg.tol, "Uzawa stopping tolerance")->capture_default_str();
        sub->add_option("--max-iterations", cfg.max_iterations, "Uzawa iteration cap")
            ->capture_default_str();
        sub->add_option("--output-dir", cfg.output_dir, "output directory")
            ->capture_default_str();
        sub->add_flag("--export-fields,!--no-export-fields", cfg.export_fields,
                      "write field files (VTK + boundary CSV)")
            ->capture_default_str();
        handles.push_back(h);
        return sub;
    };

    CLI::App* solve = add_common(app.add_subcommand("solve", "solve once on the square"));
    solve->add_option("--divisions", cfg.divisions, "square divisions per side")
        ->capture_default_str();
    solve->add_option("--mesh-file", cfg.mesh_file, "import a plain-text mesh instead");

    CLI::App* converge =
        add_common(app.add_subcommand("converge", "uniform-refinement convergence study"));
    converge->add_option("--divisions", cfg.divisions, "coarsest divisions per side")
        ->capture_default_str();
    handles.back().levels =
        converge->add_option("--levels", cfg.levels, "number of refinement levels")
            ->capture_default_str();

    CLI::App* halfdisk =
        add_common(app.add_subcommand("halfdisk", "curved-boundary demonstration"));
    handles.back().levels =
        halfdisk->add_option("--levels", cfg.levels, "refinements of the coarse fan")
            ->capture_default_str();

    CLI::App* manufactured = add_common(
        app.add_subcommand("manufactured", "multiplier-frozen manufactured-solution check"));
    manufactured->add_option("--divisions", cfg.divisions, "coarsest divisions per side")
        ->capture_default_str();
    handles.back().levels =
        manufactured->add_option("--levels", cfg.levels, "number of refinement levels")
            ->capture_default_str();

    const std::vector<std::string> expanded = expand_config_files(args);
    std::vector<const char*> argv;
    argv.push_back("slipstokes");
    for (const auto& a : expanded) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        throw;
    }

    for (const auto& h : handles) {
        if (!h.sub->parsed()) continue;
        cfg.command = h.sub->get_name();
        if (cfg.command == "halfdisk") {
            // curved-boundary demonstration defaults
            if (h.kappa->count() == 0) cfg.kappa = 0.1;
            if (h.rho->count() == 0) cfg.rho = 0.1;
            if (h.levels->count() == 0) cfg.levels = 4;
        }
    }
    cfg.validate();
    return cfg;
}

}  // namespace slipstokes
