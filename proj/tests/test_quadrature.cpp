#include <doctest.h>

#include <cmath>

#include "slipstokes/quadrature.hpp"

using namespace slipstokes;

namespace {

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

/// Exact integral of x^a y^b over the reference triangle {(0,0),(1,0),(0,1)}.
double reference_monomial(int a, int b) {
    return factorial(a) * factorial(b) / factorial(a + b + 2);
}

}  // namespace

TEST_CASE("triangle rule: weights and monomial exactness") {
    const TriangleRule& rule = triangle_rule_degree4();
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(0.5).epsilon(1e-15));

    for (int a = 0; a + 0 <= rule.degree; ++a) {
        for (int b = 0; a + b <= rule.degree; ++b) {
            double val = 0.0;
            for (std::size_t q = 0; q < rule.points.size(); ++q)
                val += rule.weights[q] * std::pow(rule.points[q].x, a) *
                       std::pow(rule.points[q].y, b);
            CHECK(val == doctest::Approx(reference_monomial(a, b)).epsilon(1e-13));
        }
    }
}

TEST_CASE("edge rule: weights and monomial exactness") {
    const EdgeRule& rule = edge_rule_degree3();
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-15));

    for (int k = 0; k <= rule.degree; ++k) {
        double val = 0.0;
        for (std::size_t q = 0; q < rule.points.size(); ++q)
            val += rule.weights[q] * std::pow(rule.points[q], k);
        CHECK(val == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
    }
}

TEST_CASE("physical integration over cells and facets") {
    const Triangulation mesh = generate_square(2);
    double area = 0.0, moment = 0.0;
    for (int c = 0; c < mesh.cell_count(); ++c) {
        area += integrate_cell(mesh, c, triangle_rule_degree4(),
                               [](Vec2, const std::array<double, 3>&) { return 1.0; });
        moment += integrate_cell(mesh, c, triangle_rule_degree4(),
                                 [](Vec2 x, const std::array<double, 3>&) { return x.x * x.x; });
    }
    CHECK(area == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(moment == doctest::Approx(4.0 / 3.0).epsilon(1e-13));

    double perimeter = 0.0, edge_moment = 0.0;
    for (int f = 0; f < mesh.facet_count(); ++f) {
        perimeter += integrate_facet(mesh, f, edge_rule_degree3(), [](Vec2, double) { return 1.0; });
        edge_moment +=
            integrate_facet(mesh, f, edge_rule_degree3(), [](Vec2 x, double) { return x.y; });
    }
    CHECK(perimeter == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(edge_moment == doctest::Approx(0.0).epsilon(1e-14));
}
