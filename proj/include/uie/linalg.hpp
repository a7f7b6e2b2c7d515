#pragma once

#include <cstddef>
#include <vector>

#include "uie/errors.hpp"

namespace uie {

using RealVector = std::vector<double>;

/// Dense row-major matrix of doubles. Construction rejects non-finite entries.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static DenseMatrix identity(std::size_t n);

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    DenseMatrix transposed() const;

    /// Largest absolute entry.
    double max_abs() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

RealVector multiply(const DenseMatrix& a, const RealVector& x);

/// Solve a·x = b by Gaussian elimination with partial pivoting.
///
/// Never forms an inverse. Throws SingularMatrix when a pivot magnitude drops
/// below 1e-14 times the largest initial |entry| of a, DimensionMismatch when
/// shapes disagree.
RealVector solve_dense(const DenseMatrix& a, const RealVector& b);

/// Max-norm residual of a candidate solution, max_i |(a·x - b)_i|.
double residual_norm(const DenseMatrix& a, const RealVector& x, const RealVector& b);

} // namespace uie
