#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "uie/model.hpp"
#include "uie/stencil.hpp"

namespace uie {

enum class TestFunctionKind {
    Cubic,
    Quartic,
    Sine,
};

/// Analytic test function with known derivatives of every order.
struct TestFunction {
    TestFunctionKind kind = TestFunctionKind::Sine;
    std::vector<double> coefficients; // descending powers for polynomials

    static TestFunction cubic(double a, double b, double c, double d);
    static TestFunction quartic(double a, double b, double c, double d, double f);
    static TestFunction sine();
};

double eval_test_function(const TestFunction& f, double x);

/// Exact m-th derivative: zero beyond a polynomial's degree, the sin/cos
/// cycle for the sine function.
double eval_test_derivative(const TestFunction& f, double x, std::size_t order);

/// Barycentric Lagrange (second form) evaluation of the unique interpolating
/// polynomial through the samples. Structurally independent of the linear
/// solve, so agreement with the fitted model is meaningful evidence.
/// Exact node hits return the stored y.
double lagrange_eval(const SampleSet& samples, double x);

struct ErrorRow {
    double x = 0.0;
    double analytic = 0.0;
    double model_value = 0.0;
    double err = 0.0; // analytic - model_value
};

std::vector<ErrorRow> build_error_table(const TestFunction& f, const TaylorModel& model,
                                        std::span<const double> xs);

/// n equidistant nodes spanning [x_lo, x_hi] inclusive, y = f(x) at each.
SampleSet generate_samples(const TestFunction& f, double x_lo, double x_hi, std::size_t n);

} // namespace uie
