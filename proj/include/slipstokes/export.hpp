#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "slipstokes/mesh.hpp"
#include "slipstokes/spaces.hpp"

namespace slipstokes {

/// Thrown on file-system failures; the message names the path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Legacy ASCII unstructured-grid file: mesh, point-data velocity vectors,
/// pressure and velocity-magnitude scalars. Deterministic formatting.
void write_vtk_legacy(std::ostream& os, const Triangulation& mesh, const VelocityField& u,
                      const PressureField& p);

/// One row per boundary facet: midpoint, tag, lambda.n, |lambda_t|,
/// sign(lambda_t . t), facet means of u.n and u.t. 17 significant digits.
void write_boundary_csv(std::ostream& os, const Triangulation& mesh,
                        const MixedSolution& solution);

/// Writes fields.vtk, boundary.csv and mesh.txt under `directory` (created
/// if missing). Throws IoError on failure.
void export_fields(const std::string& directory, const Triangulation& mesh,
                   const MixedSolution& solution);

}  // namespace slipstokes
