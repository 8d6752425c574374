#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "slipstokes/vec2.hpp"

namespace slipstokes {

/// Boundary region labels assigned by the generators and inherited under
/// refinement.
namespace tag {
inline constexpr int left = 0;
inline constexpr int right = 1;
inline constexpr int bottom = 2;
inline constexpr int top = 3;
inline constexpr int arc = 0;
inline constexpr int diameter = 1;
}  // namespace tag

struct BoundaryFacet {
    std::array<int, 2> endpoints;  // vertex indices, ordered along the boundary
    int cell = -1;                 // the unique adjacent cell
    Vec2 normal;                   // outward unit normal
    double length = 0.0;           // h_E
    int tag = 0;
};

/// Provenance of a fine vertex: either a copy of coarse vertex a (a == b) or
/// the midpoint of the coarse edge (a, b).
struct ParentVertex {
    int a = -1;
    int b = -1;
    bool is_copy() const { return a == b; }
};

/// Facets carrying this tag lie on the circle |x - center| = radius; uniform
/// refinement projects their new midpoint vertices back onto the circle.
struct CurvedBoundary {
    int tag = 0;
    Vec2 center;
    double radius = 1.0;
};

/// Conforming triangulation with counter-clockwise cells. Immutable after
/// construction by convention; all queries are safe to run concurrently.
struct Triangulation {
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> cells;
    std::vector<BoundaryFacet> boundary_facets;
    std::vector<double> cell_diameters;  // h_T, longest edge
    int level = 0;
    std::vector<ParentVertex> parent_vertex_map;  // empty at level 0
    std::vector<int> parent_facet_map;            // empty at level 0
    std::optional<CurvedBoundary> curved_boundary;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int cell_count() const { return static_cast<int>(cells.size()); }
    int facet_count() const { return static_cast<int>(boundary_facets.size()); }

    double cell_area(int c) const;
    Vec2 cell_centroid(int c) const;
    Vec2 facet_midpoint(int f) const;
};

/// Per-cell P1 geometry: vertex coordinates, positive area and the constant
/// gradients of the three barycentric basis functions.
struct CellGeometry {
    std::array<Vec2, 3> x;
    double area = 0.0;
    std::array<Vec2, 3> grad;
};

CellGeometry cell_geometry(const Triangulation& mesh, int cell);

/// Structured mesh of (-1,1)^2, each sub-square split along the same
/// diagonal. Facets are tagged tag::left/right/bottom/top.
Triangulation generate_square(int divisions_per_side);

/// Half disk {x^2 + (y-0.5)^2 < 1, y < 0.5}: a 4-sector fan about (0, 0.5)
/// refined `levels` times with arc projection. Facets tagged tag::arc and
/// tag::diameter.
Triangulation generate_halfdisk(int levels);

/// Red refinement: every triangle splits into 4 via edge midpoints; boundary
/// facets split into 2. Midpoints on a curved boundary are projected onto it
/// before any geometry is computed. Parent maps reference `mesh`.
Triangulation refine_uniform(const Triangulation& mesh);

/// True iff every boundary facet normal points away from its adjacent cell
/// centroid.
bool boundary_normals_check(const Triangulation& mesh);

double mesh_area(const Triangulation& mesh);

/// Plain-text format: "nv nc nb" header, then vertex, cell and boundary
/// facet lines. Normals and size functions are recomputed on read.
void write_mesh_text(std::ostream& os, const Triangulation& mesh);
Triangulation read_mesh_text(std::istream& is);

}  // namespace slipstokes
