#include "uie/stencil.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace uie {

namespace {

void check_point_count(std::size_t n) {
    if (n < 3 || n % 2 == 0 || n > kMaxPoints) {
        std::ostringstream os;
        os << "point count must be odd, >= 3 and <= " << kMaxPoints << "; got " << n;
        throw InvalidPointCount(os.str());
    }
}

void check_step(double dx) {
    if (!std::isfinite(dx) || dx <= 0.0) {
        std::ostringstream os;
        os << "step must be finite and positive; got " << dx;
        throw InvalidStep(os.str());
    }
}

} // namespace

SampleSet SampleSet::from_points(std::vector<double> xs, std::vector<double> ys) {
    SampleSet s;
    s.xs = std::move(xs);
    s.ys = std::move(ys);
    s.n = s.xs.size();
    if (s.n != 0) {
        s.alpha = (s.n - 1) / 2;
        s.x0 = s.xs[s.alpha];
        s.dx = (s.xs[s.n - 1] - s.xs[0]) / static_cast<double>(s.n - 1);
    }
    validate_sample_set(s);
    return s;
}

void validate_sample_set(const SampleSet& samples) {
    const std::size_t n = samples.n;
    if (n < 3) {
        throw InvalidSampleSet("too few points: need at least 3");
    }
    if (n % 2 == 0) {
        throw InvalidSampleSet("point count must be odd");
    }
    if (samples.xs.size() != n || samples.ys.size() != n) {
        throw InvalidSampleSet("xs/ys lengths must both equal the point count");
    }
    for (double v : samples.xs) {
        if (!std::isfinite(v)) {
            throw InvalidSampleSet("x values must be finite");
        }
    }
    for (double v : samples.ys) {
        if (!std::isfinite(v)) {
            throw InvalidSampleSet("y values must be finite");
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(samples.xs[i] < samples.xs[i + 1])) {
            throw InvalidSampleSet("x values must be strictly increasing");
        }
    }
    if (samples.alpha != (n - 1) / 2 || samples.x0 != samples.xs[samples.alpha]) {
        throw InvalidSampleSet("midpoint fields inconsistent with the x grid");
    }
    const double dx = (samples.xs[n - 1] - samples.xs[0]) / static_cast<double>(n - 1);
    if (samples.dx != dx) {
        throw InvalidSampleSet("step field inconsistent with the x grid");
    }
    const double tol = 1e-9 * std::max(1.0, std::abs(dx));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double gap = samples.xs[i + 1] - samples.xs[i];
        if (std::abs(gap - dx) > tol) {
            std::ostringstream os;
            os << "non-equidistant grid: gap " << gap << " at index " << i
               << " differs from step " << dx;
            throw InvalidSampleSet(os.str());
        }
    }
}

StencilMatrix build_taylor_matrix(std::size_t n, double dx) {
    check_point_count(n);
    check_step(dx);

    const auto alpha = static_cast<long>((n - 1) / 2);
    DenseMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double offset = static_cast<double>(static_cast<long>(i) - alpha) * dx;
        // Running product (k·dx)^m / m!; stays exactly zero past column 0
        // on the middle row.
        double term = 1.0;
        for (std::size_t m = 0; m < n; ++m) {
            c(i, m) = term;
            term = term * offset / static_cast<double>(m + 1);
        }
    }
    return StencilMatrix{std::move(c), dx};
}

DerivativeEstimates estimate_derivatives(const SampleSet& samples) {
    validate_sample_set(samples);
    const std::size_t n = samples.n;
    const double y0 = samples.ys[samples.alpha];

    // The middle row of C reads y0 = d[0], so substitute it up front and
    // solve the remaining (n-1)-system for d[1..]. This keeps d[0] = y0
    // exact regardless of how ill-conditioned the rest of the system is.
    const StencilMatrix c = build_taylor_matrix(n, samples.dx);
    DenseMatrix reduced(n - 1, n - 1);
    RealVector rhs(n - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == samples.alpha) {
            continue;
        }
        rhs[r] = samples.ys[i] - y0;
        for (std::size_t m = 1; m < n; ++m) {
            reduced(r, m - 1) = c.matrix(i, m);
        }
        ++r;
    }
    const RealVector tail = solve_dense(reduced, rhs);

    RealVector d(n);
    d[0] = y0;
    for (std::size_t m = 1; m < n; ++m) {
        d[m] = tail[m - 1];
    }
    return DerivativeEstimates{std::move(d), samples.x0, samples.dx};
}

RealVector stencil_weights(std::size_t n, double dx, std::size_t order) {
    check_point_count(n);
    check_step(dx);
    if (order >= n) {
        std::ostringstream os;
        os << "derivative order " << order << " requires more than " << n << " points";
        throw InvalidOrder(os.str());
    }
    // Row `order` of C^-1 is the solution of C^T w = e_order.
    const StencilMatrix c = build_taylor_matrix(n, dx);
    RealVector unit(n, 0.0);
    unit[order] = 1.0;
    return solve_dense(c.matrix.transposed(), unit);
}

} // namespace uie
