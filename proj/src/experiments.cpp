#include "uie/experiments.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace uie {

namespace {

ExperimentReport run_experiment(std::string name, ExperimentSpec spec) {
    ExperimentReport report;
    report.name = std::move(name);
    report.feed = generate_samples(spec.test_function, spec.feed_lo, spec.feed_hi,
                                   spec.n_points);
    report.d_vector = estimate_derivatives(report.feed);
    report.model = fit(report.feed);
    report.error_table = build_error_table(spec.test_function, report.model,
                                           spec.probe_points);
    report.dense_series.reserve(spec.dense_count);
    for (std::size_t i = 0; i < spec.dense_count; ++i) {
        const double x = spec.eval_lo +
                         (spec.eval_hi - spec.eval_lo) *
                             (static_cast<double>(i) / static_cast<double>(spec.dense_count - 1));
        report.dense_series.push_back(DensePoint{
            x,
            eval_test_function(spec.test_function, x),
            evaluate(report.model, x),
        });
    }
    report.spec = std::move(spec);
    return report;
}

} // namespace

ExperimentReport run_cubic_experiment() {
    ExperimentSpec spec;
    spec.test_function = TestFunction::cubic(3.0, 2.0, 1.0, 4.0);
    spec.feed_lo = -3.0;
    spec.feed_hi = -2.0;
    spec.n_points = 5;
    spec.eval_lo = -5.0;
    spec.eval_hi = 5.0;
    spec.probe_points = {999.0, 9999.0};
    spec.dense_count = 201;
    return run_experiment("cubic", std::move(spec));
}

ExperimentReport run_quartic_experiment() {
    ExperimentSpec spec;
    spec.test_function = TestFunction::quartic(5.0, 3.0, 1.0, 4.0, 2.0);
    spec.feed_lo = 3.0;
    spec.feed_hi = 4.0;
    spec.n_points = 5;
    spec.eval_lo = 1.0;
    spec.eval_hi = 6.0;
    spec.probe_points = {999.0, 9999.0};
    spec.dense_count = 201;
    return run_experiment("quartic", std::move(spec));
}

ExperimentReport run_sine_experiment(std::size_t n_points) {
    if (n_points != 5 && n_points != 9) {
        std::ostringstream os;
        os << "sine experiment supports 5 or 9 feed points; got " << n_points;
        throw InvalidPointCount(os.str());
    }
    constexpr double pi = std::numbers::pi;
    ExperimentSpec spec;
    spec.test_function = TestFunction::sine();
    spec.feed_lo = -pi;
    spec.feed_hi = pi;
    spec.n_points = n_points;
    // Evaluation window reaches one full period past each feed boundary so
    // the series covers both interpolation and extrapolation behavior.
    spec.eval_lo = -2.0 * pi;
    spec.eval_hi = 2.0 * pi;
    spec.probe_points = {2.0 * pi / 3.0, 5.0 * pi / 6.0};
    spec.dense_count = 201;
    return run_experiment(n_points == 5 ? "sine5" : "sine9", std::move(spec));
}

std::vector<FigureRow> emit_figure_data(const ExperimentReport& report) {
    std::vector<FigureRow> rows;
    rows.reserve(report.feed.n + 2 * report.dense_series.size());
    for (std::size_t i = 0; i < report.feed.n; ++i) {
        rows.push_back(FigureRow{"feed", report.feed.xs[i], report.feed.ys[i], std::nullopt});
    }
    for (const DensePoint& p : report.dense_series) {
        rows.push_back(FigureRow{"analytic", p.x, p.analytic, std::nullopt});
    }
    for (const DensePoint& p : report.dense_series) {
        rows.push_back(FigureRow{"model", p.x, std::nullopt, p.model});
    }
    return rows;
}

} // namespace uie
