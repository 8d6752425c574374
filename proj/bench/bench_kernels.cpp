// Compares the OpenMP kernels against the serial reference on a set of
// refined meshes: assembly of the subproblem matrix, the load vector and the
// H1 norm. Results must be bit-identical; the table reports wall times and
// speedups.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "slipstokes/assembly.hpp"
#include "slipstokes/norms.hpp"

using namespace slipstokes;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        f();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int max_divisions = 256;
    if (argc > 1) max_divisions = std::atoi(argv[1]);

#if defined(_OPENMP)
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
    std::printf("%-10s %-10s %12s %12s %9s %s\n", "kernel", "divisions", "serial [ms]",
                "openmp [ms]", "speedup", "bitwise");

    for (int divisions = 64; divisions <= max_divisions; divisions *= 2) {
        const Triangulation mesh = generate_square(divisions);
        const SystemSpaces spaces = make_spaces(mesh);
        const ProblemData data = make_problem_data(
            mesh, 1.0, 0.3, [](Vec2 x) { return Vec2{-x.y, x.x}; }, 0.01, 0.01);

        VelocityField u = VelocityField::zero(mesh);
        std::mt19937_64 gen(42);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (auto& v : u.values) v = dist(gen);

        const int reps = 3;

        SparseMatrix m_serial, m_omp;
        const double t_lhs_s =
            best_of(reps, [&] { m_serial = assemble_lhs(mesh, spaces, data, Backend::serial); });
        const double t_lhs_p =
            best_of(reps, [&] { m_omp = assemble_lhs(mesh, spaces, data, Backend::openmp); });
        bool same = m_serial.entries().size() == m_omp.entries().size();
        for (std::size_t i = 0; same && i < m_serial.entries().size(); ++i)
            same = m_serial.entries()[i].value == m_omp.entries()[i].value &&
                   m_serial.entries()[i].row == m_omp.entries()[i].row &&
                   m_serial.entries()[i].col == m_omp.entries()[i].col;
        std::printf("%-10s %-10d %12.2f %12.2f %8.2fx %s\n", "lhs", divisions, t_lhs_s,
                    t_lhs_p, t_lhs_s / t_lhs_p, same ? "yes" : "NO");

        std::vector<double> r_serial, r_omp;
        const double t_rhs_s = best_of(
            reps, [&] { r_serial = assemble_rhs_load(mesh, spaces, data, Backend::serial); });
        const double t_rhs_p = best_of(
            reps, [&] { r_omp = assemble_rhs_load(mesh, spaces, data, Backend::openmp); });
        same = r_serial == r_omp;
        std::printf("%-10s %-10d %12.2f %12.2f %8.2fx %s\n", "rhs", divisions, t_rhs_s,
                    t_rhs_p, t_rhs_s / t_rhs_p, same ? "yes" : "NO");

        double n_serial = 0.0, n_omp = 0.0;
        const double t_n_s = best_of(reps, [&] { n_serial = norm_h1(u, Backend::serial); });
        const double t_n_p = best_of(reps, [&] { n_omp = norm_h1(u, Backend::openmp); });
        std::printf("%-10s %-10d %12.2f %12.2f %8.2fx %s\n", "norm_h1", divisions, t_n_s,
                    t_n_p, t_n_s / t_n_p, n_serial == n_omp ? "yes" : "NO");
    }
    return 0;
}
