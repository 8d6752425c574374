#include "slipstokes/problem.hpp"

#include <stdexcept>
#include <string>

namespace slipstokes {

void ProblemData::validate(const Triangulation& mesh) const {
    if (!(mu > 0.0)) throw std::invalid_argument("ProblemData: mu must be > 0");
    if (!body_force) throw std::invalid_argument("ProblemData: body_force is not set");
    if (static_cast<int>(kappa.size()) != mesh.facet_count())
        throw std::invalid_argument("ProblemData: kappa must hold one value per boundary facet");
    for (double k : kappa)
        if (!(k > 0.0)) throw std::invalid_argument("ProblemData: kappa must be > 0 on every facet");
    for (double a : {alpha1, alpha2})
        if (!(a >= 0.0) || a > kMaxStabilisation)
            throw std::invalid_argument("ProblemData: stabilisation parameters must lie in [0, " +
                                        std::to_string(kMaxStabilisation) + "]");
}

ProblemData make_problem_data(const Triangulation& mesh, double mu, double kappa,
                              std::function<Vec2(Vec2)> body_force, double alpha1,
                              double alpha2) {
    ProblemData data;
    data.mu = mu;
    data.kappa.assign(mesh.boundary_facets.size(), kappa);
    data.body_force = std::move(body_force);
    data.alpha1 = alpha1;
    data.alpha2 = alpha2;
    data.validate(mesh);
    return data;
}

ProblemData inherit_problem_data(const ProblemData& coarse, const Triangulation& fine_mesh) {
    if (fine_mesh.parent_facet_map.size() != fine_mesh.boundary_facets.size())
        throw std::invalid_argument("inherit_problem_data: fine mesh has no parent facet map");
    ProblemData fine = coarse;
    fine.kappa.resize(fine_mesh.boundary_facets.size());
    for (std::size_t f = 0; f < fine.kappa.size(); ++f)
        fine.kappa[f] = coarse.kappa.at(fine_mesh.parent_facet_map[f]);
    return fine;
}

}  // namespace slipstokes
