#include "uie/verification.hpp"

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

// Horner over descending-power coefficients.
double eval_poly(const std::vector<double>& coefficients, double x) {
    double acc = 0.0;
    for (double c : coefficients) {
        acc = acc * x + c;
    }
    return acc;
}

} // namespace

TestFunction TestFunction::cubic(double a, double b, double c, double d) {
    return TestFunction{TestFunctionKind::Cubic, {a, b, c, d}};
}

TestFunction TestFunction::quartic(double a, double b, double c, double d, double f) {
    return TestFunction{TestFunctionKind::Quartic, {a, b, c, d, f}};
}

TestFunction TestFunction::sine() {
    return TestFunction{TestFunctionKind::Sine, {}};
}

double eval_test_function(const TestFunction& f, double x) {
    check_finite_abscissa(x);
    if (f.kind == TestFunctionKind::Sine) {
        return std::sin(x);
    }
    return eval_poly(f.coefficients, x);
}

double eval_test_derivative(const TestFunction& f, double x, std::size_t order) {
    if (f.kind == TestFunctionKind::Sine) {
        switch (order % 4) {
        case 0: return std::sin(x);
        case 1: return std::cos(x);
        case 2: return -std::sin(x);
        default: return -std::cos(x);
        }
    }
    const std::size_t degree = f.coefficients.size() - 1;
    if (order > degree) {
        return 0.0;
    }
    // Coefficient of x^p picks up the falling factorial p(p-1)...(p-order+1).
    std::vector<double> deriv(degree - order + 1);
    for (std::size_t i = 0; i < deriv.size(); ++i) {
        const std::size_t power = degree - i; // original power of this term
        double multiplier = 1.0;
        for (std::size_t k = 0; k < order; ++k) {
            multiplier *= static_cast<double>(power - k);
        }
        deriv[i] = f.coefficients[i] * multiplier;
    }
    return eval_poly(deriv, x);
}

double lagrange_eval(const SampleSet& samples, double x) {
    validate_sample_set(samples);
    check_finite_abscissa(x);

    // Exact node hits short-circuit so the barycentric form never divides
    // by zero.
    for (std::size_t j = 0; j < samples.n; ++j) {
        if (x == samples.xs[j]) {
            return samples.ys[j];
        }
    }

    // Second-form barycentric weights w_j = 1 / prod_{i != j} (x_j - x_i).
    const std::size_t n = samples.n;
    std::vector<double> weights(n, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i != j) {
                weights[j] /= (samples.xs[j] - samples.xs[i]);
            }
        }
    }
    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double t = weights[j] / (x - samples.xs[j]);
        numerator += t * samples.ys[j];
        denominator += t;
    }
    return numerator / denominator;
}

std::vector<ErrorRow> build_error_table(const TestFunction& f, const TaylorModel& model,
                                        std::span<const double> xs) {
    std::vector<ErrorRow> rows;
    rows.reserve(xs.size());
    for (double x : xs) {
        ErrorRow row;
        row.x = x;
        row.analytic = eval_test_function(f, x);
        row.model_value = evaluate(model, x);
        row.err = row.analytic - row.model_value;
        rows.push_back(row);
    }
    return rows;
}

SampleSet generate_samples(const TestFunction& f, double x_lo, double x_hi, std::size_t n) {
    if (!std::isfinite(x_lo) || !std::isfinite(x_hi) || !(x_lo < x_hi)) {
        std::ostringstream os;
        os << "range [" << x_lo << ", " << x_hi << "] must be finite with x_lo < x_hi";
        throw InvalidRange(os.str());
    }
    if (n < 3 || n % 2 == 0) {
        std::ostringstream os;
        os << "point count must be odd and >= 3; got " << n;
        throw InvalidPointCount(os.str());
    }
    const double span = x_hi - x_lo;
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        // lo + span * (i / (n-1)) lands exactly on dyadic grids.
        xs[i] = x_lo + span * (static_cast<double>(i) / static_cast<double>(n - 1));
    }
    xs[n - 1] = x_hi; // span inclusive of both endpoints
    for (std::size_t i = 0; i < n; ++i) {
        ys[i] = eval_test_function(f, xs[i]);
    }
    return SampleSet::from_points(std::move(xs), std::move(ys));
}

} // namespace uie
