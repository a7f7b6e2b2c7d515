#include "uie/linalg.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>
#include <utility>

namespace uie {

namespace {

void check_entries_finite(const std::vector<double>& entries) {
    for (double v : entries) {
        if (!std::isfinite(v)) {
            throw NonFiniteInput("matrix entries must be finite");
        }
    }
}

std::string shape_message(const char* what, std::size_t got, std::size_t expected) {
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << expected;
    return os.str();
}

} // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionMismatch(shape_message("entry count", entries_.size(), rows_ * cols_));
    }
    check_entries_finite(entries_);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : entries_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

RealVector multiply(const DenseMatrix& a, const RealVector& x) {
    if (x.size() != a.cols()) {
        throw DimensionMismatch(shape_message("vector length", x.size(), a.cols()));
    }
    RealVector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            acc += a(i, j) * x[j];
        }
        y[i] = acc;
    }
    return y;
}

RealVector solve_dense(const DenseMatrix& a, const RealVector& b) {
    if (!a.square()) {
        throw DimensionMismatch(shape_message("matrix must be square", a.rows(), a.cols()));
    }
    if (b.size() != a.rows()) {
        throw DimensionMismatch(shape_message("right-hand side length", b.size(), a.rows()));
    }
    for (double v : b) {
        if (!std::isfinite(v)) {
            throw NonFiniteInput("right-hand side entries must be finite");
        }
    }

    const std::size_t n = a.rows();
    const double pivot_floor = 1e-14 * a.max_abs();

    DenseMatrix work = a;
    RealVector rhs = b;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        double pivot_mag = std::abs(work(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(work(r, col));
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = r;
            }
        }
        if (pivot_mag <= pivot_floor) {
            std::ostringstream os;
            os << "pivot " << pivot_mag << " below threshold " << pivot_floor
               << " at elimination step " << col;
            throw SingularMatrix(os.str());
        }
        if (pivot_row != col) {
            for (std::size_t j = col; j < n; ++j) {
                std::swap(work(col, j), work(pivot_row, j));
            }
            std::swap(rhs[col], rhs[pivot_row]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = work(r, col) / work(col, col);
            if (factor == 0.0) {
                continue;
            }
            work(r, col) = 0.0;
            for (std::size_t j = col + 1; j < n; ++j) {
                work(r, j) -= factor * work(col, j);
            }
            rhs[r] -= factor * rhs[col];
        }
    }

    RealVector x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= work(i, j) * x[j];
        }
        x[i] = acc / work(i, i);
    }
    return x;
}

double residual_norm(const DenseMatrix& a, const RealVector& x, const RealVector& b) {
    if (b.size() != a.rows()) {
        throw DimensionMismatch(shape_message("right-hand side length", b.size(), a.rows()));
    }
    const RealVector ax = multiply(a, x);
    double norm = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) {
        norm = std::max(norm, std::abs(ax[i] - b[i]));
    }
    return norm;
}

} // namespace uie
