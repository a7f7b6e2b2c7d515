#pragma once

#include <cstddef>
#include <vector>

#include "uie/linalg.hpp"

namespace uie {

/// Largest supported point count. Beyond 21 points the coefficient matrix is
/// catastrophically ill-conditioned and 21! exceeds the exactly representable
/// integer range of a double.
inline constexpr std::size_t kMaxPoints = 21;

/// An odd number of equidistant samples (x_k, y_k), k = -alpha..alpha, with
/// midpoint x0 = xs[alpha] and step dx.
struct SampleSet {
    std::vector<double> xs;
    std::vector<double> ys;
    std::size_t n = 0;
    std::size_t alpha = 0;
    double x0 = 0.0;
    double dx = 0.0;

    /// Validating constructor. dx is recomputed as (x_max - x_min)/(n - 1);
    /// every gap must match it to 1e-9 relative.
    static SampleSet from_points(std::vector<double> xs, std::vector<double> ys);
};

/// Checks every SampleSet invariant, throwing InvalidSampleSet on violation.
void validate_sample_set(const SampleSet& samples);

/// The n-by-n coefficient matrix relating midpoint derivatives to samples:
/// row for node offset k, column m holds (k·dx)^m / m!.
struct StencilMatrix {
    DenseMatrix matrix;
    double dx = 0.0;
};

/// Estimated derivatives at the midpoint: d[m] approximates the m-th
/// derivative of the sampled function at x0.
struct DerivativeEstimates {
    RealVector d;
    double x0 = 0.0;
    double dx = 0.0;
};

/// Builds the Taylor coefficient matrix for n odd equidistant nodes.
///
/// Entries are accumulated by repeated multiplication,
/// term_{m+1} = term_m · (k·dx)/(m+1), so the middle row (k = 0) is exactly
/// the first standard basis vector.
StencilMatrix build_taylor_matrix(std::size_t n, double dx);

/// Solves C·D = Y for the midpoint derivative estimates.
DerivativeEstimates estimate_derivatives(const SampleSet& samples);

/// Finite-difference weights w such that sum_k w[k]·y_k estimates the
/// `order`-th derivative at the midpoint; row `order` of C^-1.
RealVector stencil_weights(std::size_t n, double dx, std::size_t order);

} // namespace uie
