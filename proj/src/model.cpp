#include "uie/model.hpp"

#include <cmath>
#include <sstream>

namespace uie {

namespace {

void check_finite_abscissa(double x) {
    if (!std::isfinite(x)) {
        std::ostringstream os;
        os << "abscissa must be finite; got " << x;
        throw NonFiniteInput(os.str());
    }
}

} // namespace

TaylorModel fit(const SampleSet& samples) {
    const DerivativeEstimates estimates = estimate_derivatives(samples);

    TaylorModel model;
    model.x0 = estimates.x0;
    model.dx = estimates.dx;
    model.n_points = samples.n;
    model.range_lo = samples.xs.front();
    model.range_hi = samples.xs.back();
    model.coeffs.resize(samples.n);
    double factorial = 1.0; // exact for every m < 21
    for (std::size_t m = 0; m < samples.n; ++m) {
        if (m > 0) {
            factorial *= static_cast<double>(m);
        }
        model.coeffs[m] = estimates.d[m] / factorial;
    }
    return model;
}

double evaluate(const TaylorModel& model, double x) {
    check_finite_abscissa(x);
    const double u = x - model.x0;
    double acc = 0.0;
    for (std::size_t m = model.coeffs.size(); m-- > 0;) {
        acc = acc * u + model.coeffs[m];
    }
    return acc;
}

std::vector<double> evaluate_many(const TaylorModel& model, std::span<const double> xs) {
    std::vector<double> values;
    values.reserve(xs.size());
    for (double x : xs) {
        values.push_back(evaluate(model, x));
    }
    return values;
}

EvaluationKind classify(const TaylorModel& model, double x) {
    check_finite_abscissa(x);
    return (x >= model.range_lo && x <= model.range_hi) ? EvaluationKind::Interpolation
                                                        : EvaluationKind::Extrapolation;
}

double derivative_at(const TaylorModel& model, double x, std::size_t order) {
    if (order >= model.n_points) {
        std::ostringstream os;
        os << "derivative order " << order << " out of range for " << model.n_points
           << " coefficients";
        throw InvalidOrder(os.str());
    }
    check_finite_abscissa(x);

    // Differentiating term by term: the j-th coefficient of the order-th
    // derivative is coeffs[order + j] * (order + j)! / j!. The multipliers
    // are integers and stay exactly representable for n_points <= 21.
    const std::size_t terms = model.n_points - order;
    double multiplier = 1.0;
    for (std::size_t i = 1; i <= order; ++i) {
        multiplier *= static_cast<double>(i);
    }
    std::vector<double> deriv_coeffs(terms);
    for (std::size_t j = 0; j < terms; ++j) {
        deriv_coeffs[j] = model.coeffs[order + j] * multiplier;
        multiplier = multiplier * static_cast<double>(order + j + 1) /
                     static_cast<double>(j + 1);
    }

    const double u = x - model.x0;
    double acc = 0.0;
    for (std::size_t j = terms; j-- > 0;) {
        acc = acc * u + deriv_coeffs[j];
    }
    return acc;
}

} // namespace uie
