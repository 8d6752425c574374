#include "slipstokes/linalg.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace slipstokes {

SparseMatrix SparseMatrix::from_triplets(int dimension, std::vector<Triplet> triplets) {
    for (const auto& t : triplets)
        if (t.row < 0 || t.row >= dimension || t.col < 0 || t.col >= dimension)
            throw std::invalid_argument("SparseMatrix: triplet index out of range");
    // stable sort keeps the original stream order within each (row, col),
    // so duplicate accumulation order is independent of how the stream
    // was produced
    std::stable_sort(triplets.begin(), triplets.end(),
                     [](const Triplet& a, const Triplet& b) {
                         return a.row != b.row ? a.row < b.row : a.col < b.col;
                     });
    SparseMatrix m;
    m.dim_ = dimension;
    m.entries_.reserve(triplets.size());
    for (const auto& t : triplets) {
        if (!m.entries_.empty() && m.entries_.back().row == t.row &&
            m.entries_.back().col == t.col)
            m.entries_.back().value += t.value;
        else
            m.entries_.push_back({t.row, t.col, t.value});
    }
    return m;
}

std::vector<double> SparseMatrix::multiply(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("SparseMatrix::multiply: dimension mismatch");
    std::vector<double> y(dim_, 0.0);
    for (const auto& e : entries_) y[e.row] += e.value * x[e.col];
    return y;
}

double SparseMatrix::inf_norm() const {
    std::vector<double> row_sum(dim_, 0.0);
    for (const auto& e : entries_) row_sum[e.row] += std::abs(e.value);
    double m = 0.0;
    for (double s : row_sum) m = std::max(m, s);
    return m;
}

double SparseMatrix::coeff(int row, int col) const {
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), std::pair{row, col},
        [](const Entry& e, const std::pair<int, int>& key) {
            return e.row != key.first ? e.row < key.first : e.col < key.second;
        });
    if (it != entries_.end() && it->row == row && it->col == col) return it->value;
    return 0.0;
}

void SparseMatrix::write_coordinate(std::ostream& os) const {
    char buf[64];
    for (const auto& e : entries_) {
        std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.row, e.col, e.value);
        os << buf;
    }
}

double backward_error(const SparseMatrix& A, std::span<const double> x,
                      std::span<const double> b, double inf_norm_A) {
    const std::vector<double> ax = A.multiply(x);
    double r = 0.0, xn = 0.0, bn = 0.0;
    for (int i = 0; i < A.dimension(); ++i) {
        r = std::max(r, std::abs(ax[i] - b[i]));
        xn = std::max(xn, std::abs(x[i]));
        bn = std::max(bn, std::abs(b[i]));
    }
    if (r == 0.0) return 0.0;
    return r / (inf_norm_A * xn + bn);
}

double backward_error(const SparseMatrix& A, std::span<const double> x,
                      std::span<const double> b) {
    return backward_error(A, x, b, A.inf_norm());
}

namespace {

Eigen::SparseMatrix<double> to_eigen(const SparseMatrix& A) {
    std::vector<Eigen::Triplet<double>> ts;
    ts.reserve(A.entries().size());
    for (const auto& e : A.entries()) ts.emplace_back(e.row, e.col, e.value);
    Eigen::SparseMatrix<double> m(A.dimension(), A.dimension());
    m.setFromTriplets(ts.begin(), ts.end());
    m.makeCompressed();
    return m;
}

}  // namespace

struct DirectSolver::Impl {
    using Lu = Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>>;

    int dimension = 0;
    bool bordered = false;
    Lu lu;  // full matrix, or the leading block when bordered

    // border data: M = [[A0, b], [c^T, d]], schur = c.w - d with w = A0^{-1} b
    Eigen::VectorXd border_col, border_row, w;
    double border_diag = 0.0;
    double schur = 0.0;
};

DirectSolver::DirectSolver(const SparseMatrix& A, bool bordered_last_unknown)
    : impl_(std::make_unique<Impl>()) {
    impl_->dimension = A.dimension();
    const int n = A.dimension();

    if (bordered_last_unknown && n > 1) {
        const int n0 = n - 1;
        std::vector<Eigen::Triplet<double>> ts;
        ts.reserve(A.entries().size());
        impl_->border_col = Eigen::VectorXd::Zero(n0);
        impl_->border_row = Eigen::VectorXd::Zero(n0);
        impl_->border_diag = 0.0;
        for (const auto& e : A.entries()) {
            if (e.row < n0 && e.col < n0)
                ts.emplace_back(e.row, e.col, e.value);
            else if (e.row < n0)
                impl_->border_col[e.row] += e.value;
            else if (e.col < n0)
                impl_->border_row[e.col] += e.value;
            else
                impl_->border_diag += e.value;
        }
        Eigen::SparseMatrix<double> a0(n0, n0);
        a0.setFromTriplets(ts.begin(), ts.end());
        a0.makeCompressed();
        impl_->lu.analyzePattern(a0);
        impl_->lu.factorize(a0);
        if (impl_->lu.info() == Eigen::Success) {
            impl_->w = impl_->lu.solve(impl_->border_col);
            impl_->schur = impl_->border_row.dot(impl_->w) - impl_->border_diag;
            const double scale =
                impl_->border_row.norm() * impl_->w.norm() + std::abs(impl_->border_diag);
            if (std::abs(impl_->schur) > 1e-14 * std::max(scale, 1e-300)) {
                impl_->bordered = true;
                return;
            }
        }
        // leading block singular or border degenerate: use the full matrix
    }

    const Eigen::SparseMatrix<double> full = to_eigen(A);
    Impl::Lu& lu = impl_->lu;
    lu.analyzePattern(full);
    lu.factorize(full);
    if (lu.info() != Eigen::Success)
        throw std::runtime_error("DirectSolver: singular matrix (" +
                                 impl_->lu.lastErrorMessage() + ")");
}

DirectSolver::~DirectSolver() = default;
DirectSolver::DirectSolver(DirectSolver&&) noexcept = default;
DirectSolver& DirectSolver::operator=(DirectSolver&&) noexcept = default;

std::vector<double> DirectSolver::solve(std::span<const double> rhs) const {
    if (static_cast<int>(rhs.size()) != impl_->dimension)
        throw std::invalid_argument("DirectSolver::solve: dimension mismatch");
    if (impl_->bordered) {
        const int n0 = impl_->dimension - 1;
        Eigen::VectorXd f(n0);
        for (int i = 0; i < n0; ++i) f[i] = rhs[i];
        const Eigen::VectorXd y = impl_->lu.solve(f);
        const double gamma = (impl_->border_row.dot(y) - rhs[n0]) / impl_->schur;
        std::vector<double> x(impl_->dimension);
        for (int i = 0; i < n0; ++i) x[i] = y[i] - gamma * impl_->w[i];
        x[n0] = gamma;
        return x;
    }
    Eigen::VectorXd b(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) b[static_cast<Eigen::Index>(i)] = rhs[i];
    const Eigen::VectorXd x = impl_->lu.solve(b);
    if (impl_->lu.info() != Eigen::Success)
        throw std::runtime_error("DirectSolver: solve failed");
    return {x.data(), x.data() + x.size()};
}

std::vector<double> solve_direct(const SparseMatrix& A, const std::vector<double>& rhs) {
    const DirectSolver solver(A);
    std::vector<double> x = solver.solve(rhs);
    const double be = backward_error(A, x, rhs);
    if (!(be <= 1e-10))
        throw std::runtime_error("solve_direct: backward error " + std::to_string(be) +
                                 " exceeds 1e-10");
    return x;
}

std::vector<double> solve_cg(const SparseMatrix& A, const std::vector<double>& rhs,
                             double tol, int max_iterations) {
    const int n = A.dimension();
    std::vector<double> x(n, 0.0), r = rhs, p = rhs;
    const auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += a[i] * b[i];
        return s;
    };
    double rr = dot(r, r);
    const double stop = tol * tol * std::max(rr, 1e-300);
    for (int it = 0; it < max_iterations && rr > stop; ++it) {
        const std::vector<double> ap = A.multiply(p);
        const double alpha = rr / dot(p, ap);
        for (int i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        const double rr_new = dot(r, r);
        const double beta = rr_new / rr;
        rr = rr_new;
        for (int i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    }
    return x;
}

SparseMatrix extract_block(const SparseMatrix& A, const std::vector<int>& dofs) {
    std::vector<int> index(A.dimension(), -1);
    for (std::size_t k = 0; k < dofs.size(); ++k) index[dofs[k]] = static_cast<int>(k);
    std::vector<Triplet> ts;
    for (const auto& e : A.entries())
        if (index[e.row] >= 0 && index[e.col] >= 0)
            ts.push_back({index[e.row], index[e.col], e.value});
    return SparseMatrix::from_triplets(static_cast<int>(dofs.size()), std::move(ts));
}

}  // namespace slipstokes
