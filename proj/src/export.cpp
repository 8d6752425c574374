#include "slipstokes/export.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "slipstokes/friction.hpp"

namespace slipstokes {

namespace {

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // normalise the sign of zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

void write_vtk_legacy(std::ostream& os, const Triangulation& mesh, const VelocityField& u,
                      const PressureField& p) {
    os << "# vtk DataFile Version 2.0\n";
    os << "slipstokes fields\n";
    os << "ASCII\n";
    os << "DATASET UNSTRUCTURED_GRID\n";
    os << "POINTS " << mesh.vertex_count() << " double\n";
    for (const auto& v : mesh.vertices) os << fmt(v.x) << ' ' << fmt(v.y) << " 0\n";
    os << "CELLS " << mesh.cell_count() << ' ' << 4 * mesh.cell_count() << '\n';
    for (const auto& t : mesh.cells) os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    os << "CELL_TYPES " << mesh.cell_count() << '\n';
    for (int c = 0; c < mesh.cell_count(); ++c) os << "5\n";
    os << "POINT_DATA " << mesh.vertex_count() << '\n';
    os << "VECTORS velocity double\n";
    for (int v = 0; v < mesh.vertex_count(); ++v) {
        const Vec2 uv = u.at_vertex(v);
        os << fmt(uv.x) << ' ' << fmt(uv.y) << " 0\n";
    }
    os << "SCALARS pressure double 1\n";
    os << "LOOKUP_TABLE default\n";
    for (int v = 0; v < mesh.vertex_count(); ++v) os << fmt(p.values[v]) << '\n';
    os << "SCALARS velocity_magnitude double 1\n";
    os << "LOOKUP_TABLE default\n";
    for (int v = 0; v < mesh.vertex_count(); ++v) os << fmt(norm(u.at_vertex(v))) << '\n';
}

void write_boundary_csv(std::ostream& os, const Triangulation& mesh,
                        const MixedSolution& solution) {
    os << "midpoint_x,midpoint_y,tag,lambda_n,abs_lambda_t,sign_lambda_t,mean_u_n,mean_u_t\n";
    for (int f = 0; f < mesh.facet_count(); ++f) {
        const auto& bf = mesh.boundary_facets[f];
        const Vec2 mid = mesh.facet_midpoint(f);
        const Vec2 lam = solution.lambda.values[f];
        const Vec2 t = perp(bf.normal);
        const Vec2 um = solution.u.facet_mean(f);
        os << fmt(mid.x) << ',' << fmt(mid.y) << ',' << bf.tag << ','
           << fmt(dot(lam, bf.normal)) << ',' << fmt(tangential_magnitude(lam, bf.normal))
           << ',' << sign_of(dot(lam - dot(lam, bf.normal) * bf.normal, t)) << ','
           << fmt(dot(um, bf.normal)) << ',' << fmt(dot(um, t)) << '\n';
    }
}

void export_fields(const std::string& directory, const Triangulation& mesh,
                   const MixedSolution& solution) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(directory, ec);
    if (ec) throw IoError("export_fields: cannot create directory " + directory);
    const auto open = [&](const std::string& name) {
        std::ofstream os(fs::path(directory) / name);
        if (!os) throw IoError("export_fields: cannot open " + directory + "/" + name);
        return os;
    };
    {
        auto os = open("fields.vtk");
        write_vtk_legacy(os, mesh, solution.u, solution.p);
    }
    {
        auto os = open("boundary.csv");
        write_boundary_csv(os, mesh, solution);
    }
    {
        auto os = open("mesh.txt");
        write_mesh_text(os, mesh);
    }
}

}  // namespace slipstokes
