#include "slipstokes/quadrature.hpp"

#include <cmath>

namespace slipstokes {

const TriangleRule& triangle_rule_degree4() {
    // Two symmetric orbits (Dunavant); barycentric weights scaled to sum 1/2.
    static const TriangleRule rule = [] {
        TriangleRule r;
        r.degree = 4;
        const double a1 = 0.445948490915965;
        const double w1 = 0.223381589678011;
        const double a2 = 0.091576213509771;
        const double w2 = 0.109951743655322;
        for (const auto& [a, w] : {std::pair{a1, w1}, std::pair{a2, w2}}) {
            r.points.push_back({a, a});
            r.points.push_back({1.0 - 2.0 * a, a});
            r.points.push_back({a, 1.0 - 2.0 * a});
            for (int k = 0; k < 3; ++k) r.weights.push_back(0.5 * w);
        }
        return r;
    }();
    return rule;
}

const EdgeRule& edge_rule_degree3() {
    static const EdgeRule rule = [] {
        EdgeRule r;
        r.degree = 3;
        const double d = 0.5 / std::sqrt(3.0);
        r.points = {0.5 - d, 0.5 + d};
        r.weights = {0.5, 0.5};
        return r;
    }();
    return rule;
}

}  // namespace slipstokes
