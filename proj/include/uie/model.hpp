#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uie/stencil.hpp"

namespace uie {

enum class EvaluationKind {
    Interpolation,
    Extrapolation,
};

/// A Taylor polynomial centered on the middle sample: coeffs[m] = d[m]/m!.
/// Immutable after fit; evaluation is pure.
struct TaylorModel {
    double x0 = 0.0;
    std::vector<double> coeffs;
    std::size_t n_points = 0;
    double dx = 0.0;
    double range_lo = 0.0;
    double range_hi = 0.0;
};

/// Fits the model to a sample set: solves for the midpoint derivatives and
/// stores Taylor coefficients once, so evaluation never touches factorials.
TaylorModel fit(const SampleSet& samples);

/// Evaluates the model polynomial by Horner's scheme in (x - x0).
double evaluate(const TaylorModel& model, double x);

std::vector<double> evaluate_many(const TaylorModel& model, std::span<const double> xs);

/// Interpolation iff range_lo <= x <= range_hi (boundary inclusive);
/// informational only, evaluation never refuses extrapolation.
EvaluationKind classify(const TaylorModel& model, double x);

/// The order-th derivative of the model polynomial at x; at x = x0 this is
/// order! · coeffs[order].
double derivative_at(const TaylorModel& model, double x, std::size_t order);

} // namespace uie
