#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

namespace slipstokes {

struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

/// Finalised sparse matrix: row-major sorted entries, duplicates merged in a
/// thread-count-independent order, so identical triplet streams give
/// bit-identical matrices.
class SparseMatrix {
  public:
    struct Entry {
        int row;
        int col;
        double value;
    };

    SparseMatrix() = default;
    static SparseMatrix from_triplets(int dimension, std::vector<Triplet> triplets);

    int dimension() const { return dim_; }
    const std::vector<Entry>& entries() const { return entries_; }

    std::vector<double> multiply(std::span<const double> x) const;
    double inf_norm() const;  // max absolute row sum
    /// Entry lookup; zero when the pattern has no (row, col).
    double coeff(int row, int col) const;

    /// "row col value" lines, 17 significant digits.
    void write_coordinate(std::ostream& os) const;

  private:
    int dim_ = 0;
    std::vector<Entry> entries_;
};

/// Componentwise backward error ||Ax - b||_inf / (||A||_inf ||x||_inf + ||b||_inf).
double backward_error(const SparseMatrix& A, std::span<const double> x,
                      std::span<const double> b);
/// Same with a precomputed ||A||_inf (for solver loops).
double backward_error(const SparseMatrix& A, std::span<const double> x,
                      std::span<const double> b, double inf_norm_A);

/// Sparse LU with partial pivoting. The factorisation is immutable after
/// construction; concurrent solves are safe.
///
/// `bordered_last_unknown` marks systems whose final unknown couples densely
/// to a whole block (the zero-mean pressure scalar): the leading block is
/// factored on its own and the border is eliminated by the rank-1 bordering
/// formula, which keeps the fill-in of the sparse block. Falls back to the
/// plain full-matrix factorisation when the leading block is singular.
class DirectSolver {
  public:
    explicit DirectSolver(const SparseMatrix& A, bool bordered_last_unknown = false);
    ~DirectSolver();
    DirectSolver(DirectSolver&&) noexcept;
    DirectSolver& operator=(DirectSolver&&) noexcept;

    std::vector<double> solve(std::span<const double> rhs) const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot factor-and-solve with a backward-error check (throws on
/// violation of 1e-10).
std::vector<double> solve_direct(const SparseMatrix& A, const std::vector<double>& rhs);

/// Conjugate gradients for symmetric positive definite systems; used as an
/// independent cross-check of the direct path.
std::vector<double> solve_cg(const SparseMatrix& A, const std::vector<double>& rhs,
                             double tol = 1e-12, int max_iterations = 10000);

/// Submatrix over the given dof subset (rows and columns), reindexed densely.
SparseMatrix extract_block(const SparseMatrix& A, const std::vector<int>& dofs);

}  // namespace slipstokes
