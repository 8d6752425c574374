#include "slipstokes/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace slipstokes {

namespace {

double signed_area(Vec2 a, Vec2 b, Vec2 c) { return 0.5 * cross(b - a, c - a); }

double longest_edge(Vec2 a, Vec2 b, Vec2 c) {
    return std::max({norm(b - a), norm(c - b), norm(a - c)});
}

void compute_cell_diameters(Triangulation& mesh) {
    mesh.cell_diameters.resize(mesh.cells.size());
    for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
        const auto& t = mesh.cells[c];
        mesh.cell_diameters[c] =
            longest_edge(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]);
    }
}

/// Unit normal of facet (a, b) pointing away from the adjacent cell centroid.
Vec2 outward_normal(const Triangulation& mesh, int va, int vb, int cell) {
    const Vec2 d = mesh.vertices[vb] - mesh.vertices[va];
    Vec2 n = Vec2{d.y, -d.x} / norm(d);
    const Vec2 mid = 0.5 * (mesh.vertices[va] + mesh.vertices[vb]);
    if (dot(n, mid - mesh.cell_centroid(cell)) < 0.0) n = -1.0 * n;
    return n;
}

void finalize_facet_geometry(Triangulation& mesh) {
    for (auto& f : mesh.boundary_facets) {
        f.length = norm(mesh.vertices[f.endpoints[1]] - mesh.vertices[f.endpoints[0]]);
        f.normal = outward_normal(mesh, f.endpoints[0], f.endpoints[1], f.cell);
    }
}

using Edge = std::pair<int, int>;

Edge sorted_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

double Triangulation::cell_area(int c) const {
    const auto& t = cells[c];
    return signed_area(vertices[t[0]], vertices[t[1]], vertices[t[2]]);
}

Vec2 Triangulation::cell_centroid(int c) const {
    const auto& t = cells[c];
    return (vertices[t[0]] + vertices[t[1]] + vertices[t[2]]) / 3.0;
}

Vec2 Triangulation::facet_midpoint(int f) const {
    const auto& e = boundary_facets[f].endpoints;
    return 0.5 * (vertices[e[0]] + vertices[e[1]]);
}

CellGeometry cell_geometry(const Triangulation& mesh, int cell) {
    const auto& t = mesh.cells[cell];
    CellGeometry g;
    g.x = {mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]};
    g.area = signed_area(g.x[0], g.x[1], g.x[2]);
    const double inv2a = 1.0 / (2.0 * g.area);
    g.grad[0] = Vec2{g.x[1].y - g.x[2].y, g.x[2].x - g.x[1].x} * inv2a;
    g.grad[1] = Vec2{g.x[2].y - g.x[0].y, g.x[0].x - g.x[2].x} * inv2a;
    g.grad[2] = Vec2{g.x[0].y - g.x[1].y, g.x[1].x - g.x[0].x} * inv2a;
    return g;
}

Triangulation generate_square(int divisions_per_side) {
    if (divisions_per_side < 1)
        throw std::invalid_argument("generate_square: divisions_per_side must be >= 1");
    const int n = divisions_per_side;
    Triangulation mesh;
    mesh.vertices.reserve((n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            mesh.vertices.push_back({-1.0 + 2.0 * i / n, -1.0 + 2.0 * j / n});

    const auto vid = [n](int i, int j) { return j * (n + 1) + i; };

    mesh.cells.reserve(2 * n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int v00 = vid(i, j), v10 = vid(i + 1, j);
            const int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
            // fixed diagonal v00 -- v11
            mesh.cells.push_back({v00, v10, v11});
            mesh.cells.push_back({v00, v11, v01});
        }
    }

    // one facet per boundary edge of the lattice, traversed side by side
    for (int i = 0; i < n; ++i) {
        BoundaryFacet f;
        f.endpoints = {vid(i, 0), vid(i + 1, 0)};
        f.cell = 2 * i;  // lower triangle of column i, row 0
        f.tag = tag::bottom;
        mesh.boundary_facets.push_back(f);
    }
    for (int j = 0; j < n; ++j) {
        BoundaryFacet f;
        f.endpoints = {vid(n, j), vid(n, j + 1)};
        f.cell = 2 * (j * n + (n - 1));  // lower triangle holds edge v10--v11
        f.tag = tag::right;
        mesh.boundary_facets.push_back(f);
    }
    for (int i = 0; i < n; ++i) {
        BoundaryFacet f;
        f.endpoints = {vid(i + 1, n), vid(i, n)};
        f.cell = 2 * ((n - 1) * n + i) + 1;  // upper triangle holds edge v11--v01
        f.tag = tag::top;
        mesh.boundary_facets.push_back(f);
    }
    for (int j = 0; j < n; ++j) {
        BoundaryFacet f;
        f.endpoints = {vid(0, j + 1), vid(0, j)};
        f.cell = 2 * (j * n) + 1;  // upper triangle holds edge v01--v00
        f.tag = tag::left;
        mesh.boundary_facets.push_back(f);
    }

    compute_cell_diameters(mesh);
    finalize_facet_geometry(mesh);
    return mesh;
}

Triangulation generate_halfdisk(int levels) {
    if (levels < 0) throw std::invalid_argument("generate_halfdisk: levels must be >= 0");
    const Vec2 center{0.0, 0.5};
    const double radius = 1.0;
    constexpr double pi = 3.14159265358979323846;

    Triangulation mesh;
    mesh.vertices.push_back(center);
    const int sectors = 4;
    for (int k = 0; k <= sectors; ++k) {
        const double theta = pi + pi * k / sectors;
        mesh.vertices.push_back(center + Vec2{std::cos(theta), std::sin(theta)});
    }
    for (int k = 0; k < sectors; ++k) mesh.cells.push_back({0, 1 + k, 2 + k});

    for (int k = 0; k < sectors; ++k) {
        BoundaryFacet f;
        f.endpoints = {1 + k, 2 + k};
        f.cell = k;
        f.tag = tag::arc;
        mesh.boundary_facets.push_back(f);
    }
    // diameter runs through the fan apex
    mesh.boundary_facets.push_back({{1 + sectors, 0}, sectors - 1, {}, 0.0, tag::diameter});
    mesh.boundary_facets.push_back({{0, 1}, 0, {}, 0.0, tag::diameter});

    mesh.curved_boundary = CurvedBoundary{tag::arc, center, radius};
    compute_cell_diameters(mesh);
    finalize_facet_geometry(mesh);

    for (int l = 0; l < levels; ++l) mesh = refine_uniform(mesh);
    return mesh;
}

Triangulation refine_uniform(const Triangulation& mesh) {
    Triangulation fine;
    fine.level = mesh.level + 1;
    fine.curved_boundary = mesh.curved_boundary;

    fine.vertices = mesh.vertices;
    fine.parent_vertex_map.reserve(mesh.vertices.size());
    for (int v = 0; v < mesh.vertex_count(); ++v) fine.parent_vertex_map.push_back({v, v});

    // midpoint vertices, one per coarse edge, in order of first encounter
    std::map<Edge, int> midpoint;
    const auto midpoint_of = [&](int a, int b) {
        const Edge e = sorted_edge(a, b);
        auto it = midpoint.find(e);
        if (it != midpoint.end()) return it->second;
        const int idx = fine.vertex_count();
        fine.vertices.push_back(0.5 * (mesh.vertices[a] + mesh.vertices[b]));
        fine.parent_vertex_map.push_back({e.first, e.second});
        midpoint.emplace(e, idx);
        return idx;
    };

    fine.cells.reserve(4 * mesh.cells.size());
    for (const auto& t : mesh.cells) {
        const int m01 = midpoint_of(t[0], t[1]);
        const int m12 = midpoint_of(t[1], t[2]);
        const int m20 = midpoint_of(t[2], t[0]);
        fine.cells.push_back({t[0], m01, m20});
        fine.cells.push_back({m01, t[1], m12});
        fine.cells.push_back({m20, m12, t[2]});
        fine.cells.push_back({m01, m12, m20});
    }

    // project arc midpoints onto the circle before any geometry is derived
    if (mesh.curved_boundary) {
        const auto& cb = *mesh.curved_boundary;
        for (const auto& f : mesh.boundary_facets) {
            if (f.tag != cb.tag) continue;
            const int m = midpoint.at(sorted_edge(f.endpoints[0], f.endpoints[1]));
            const Vec2 d = fine.vertices[m] - cb.center;
            fine.vertices[m] = cb.center + (cb.radius / norm(d)) * d;
        }
    }

    fine.boundary_facets.reserve(2 * mesh.boundary_facets.size());
    fine.parent_facet_map.reserve(2 * mesh.boundary_facets.size());
    for (std::size_t fi = 0; fi < mesh.boundary_facets.size(); ++fi) {
        const auto& f = mesh.boundary_facets[fi];
        const int a = f.endpoints[0], b = f.endpoints[1];
        const int m = midpoint.at(sorted_edge(a, b));
        for (const auto& half : {std::array<int, 2>{a, m}, std::array<int, 2>{m, b}}) {
            BoundaryFacet child;
            child.endpoints = half;
            child.tag = f.tag;
            // locate the child cell of f.cell containing both endpoints
            child.cell = -1;
            for (int k = 0; k < 4; ++k) {
                const auto& ct = fine.cells[4 * f.cell + k];
                const auto has = [&ct](int v) {
                    return ct[0] == v || ct[1] == v || ct[2] == v;
                };
                if (has(half[0]) && has(half[1])) {
                    child.cell = 4 * f.cell + k;
                    break;
                }
            }
            if (child.cell < 0)
                throw std::logic_error("refine_uniform: child facet cell not found");
            child.length = norm(fine.vertices[half[1]] - fine.vertices[half[0]]);
            fine.boundary_facets.push_back(child);
            fine.parent_facet_map.push_back(static_cast<int>(fi));
        }
    }
    compute_cell_diameters(fine);
    // children of a straight facet lie on the parent line: inherit its normal
    for (std::size_t f = 0; f < fine.boundary_facets.size(); ++f) {
        auto& child = fine.boundary_facets[f];
        const bool curved =
            mesh.curved_boundary && child.tag == mesh.curved_boundary->tag;
        if (curved)
            child.normal =
                outward_normal(fine, child.endpoints[0], child.endpoints[1], child.cell);
        else
            child.normal = mesh.boundary_facets[fine.parent_facet_map[f]].normal;
    }
    return fine;
}

bool boundary_normals_check(const Triangulation& mesh) {
    for (std::size_t f = 0; f < mesh.boundary_facets.size(); ++f) {
        const auto& bf = mesh.boundary_facets[f];
        const Vec2 mid = mesh.facet_midpoint(static_cast<int>(f));
        if (dot(bf.normal, mid - mesh.cell_centroid(bf.cell)) <= 0.0) return false;
    }
    return true;
}

double mesh_area(const Triangulation& mesh) {
    double area = 0.0;
    for (int c = 0; c < mesh.cell_count(); ++c) area += mesh.cell_area(c);
    return area;
}

void write_mesh_text(std::ostream& os, const Triangulation& mesh) {
    char buf[80];
    os << mesh.vertex_count() << ' ' << mesh.cell_count() << ' ' << mesh.facet_count()
       << '\n';
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v.x, v.y);
        os << buf;
    }
    for (const auto& t : mesh.cells) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    for (const auto& f : mesh.boundary_facets)
        os << f.endpoints[0] << ' ' << f.endpoints[1] << ' ' << f.cell << ' ' << f.tag
           << '\n';
}

Triangulation read_mesh_text(std::istream& is) {
    Triangulation mesh;
    int nv = 0, nc = 0, nb = 0;
    if (!(is >> nv >> nc >> nb) || nv < 3 || nc < 1 || nb < 3)
        throw std::runtime_error("read_mesh_text: malformed header");
    mesh.vertices.resize(nv);
    for (auto& v : mesh.vertices)
        if (!(is >> v.x >> v.y)) throw std::runtime_error("read_mesh_text: bad vertex line");
    mesh.cells.resize(nc);
    for (auto& t : mesh.cells) {
        if (!(is >> t[0] >> t[1] >> t[2]))
            throw std::runtime_error("read_mesh_text: bad cell line");
        for (int v : t)
            if (v < 0 || v >= nv) throw std::runtime_error("read_mesh_text: vertex index out of range");
    }
    mesh.boundary_facets.resize(nb);
    for (auto& f : mesh.boundary_facets) {
        if (!(is >> f.endpoints[0] >> f.endpoints[1] >> f.cell >> f.tag))
            throw std::runtime_error("read_mesh_text: bad facet line");
        if (f.cell < 0 || f.cell >= nc)
            throw std::runtime_error("read_mesh_text: facet cell index out of range");
    }
    compute_cell_diameters(mesh);
    finalize_facet_geometry(mesh);
    return mesh;
}

}  // namespace slipstokes
