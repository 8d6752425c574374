#pragma once

#include <string>
#include <vector>

namespace slipstokes {

/// Exit codes of the command line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int config_error = 2;
inline constexpr int no_convergence = 3;
inline constexpr int io_error = 4;
}  // namespace exit_code

/// Parsed and validated command line. Defaults are the square-study
/// parameters; the halfdisk command overrides kappa and rho to 0.1.
struct RunConfig {
    std::string command;  // solve | converge | halfdisk | manufactured
    int divisions = 4;    // solve: mesh resolution; converge/manufactured: coarsest level
    int levels = 5;       // converge/manufactured: number of levels; halfdisk: refinements
    double mu = 1.0;
    double kappa = 0.3;
    double alpha1 = 0.01;
    double alpha2 = 0.01;
    double rho = 0.4;
    double tol = 1e-5;
    int max_iterations = 10000;
    std::string output_dir = "out";
    bool export_fields = true;
    std::string mesh_file;  // solve: optional mesh import

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

/// Parses argv (and an optional key=value config file via --config). Unknown
/// flags or file keys are rejected with the offending name. Throws
/// std::invalid_argument on validation failure; CLI parse errors raise
/// CLI::ParseError for the caller to map.
RunConfig parse_config(const std::vector<std::string>& args);

}  // namespace slipstokes
