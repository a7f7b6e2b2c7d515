#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "uie/verification.hpp"

namespace uie {

struct ExperimentSpec {
    TestFunction test_function;
    double feed_lo = 0.0;
    double feed_hi = 0.0;
    std::size_t n_points = 0;
    double eval_lo = 0.0;
    double eval_hi = 0.0;
    std::vector<double> probe_points;
    std::size_t dense_count = 0;
};

struct DensePoint {
    double x = 0.0;
    double analytic = 0.0;
    double model = 0.0;
};

struct ExperimentReport {
    std::string name;
    ExperimentSpec spec;
    SampleSet feed;
    DerivativeEstimates d_vector;
    TaylorModel model;
    std::vector<ErrorRow> error_table;
    std::vector<DensePoint> dense_series;
};

// The feed ranges are fixed to make runs reproducible: cubic on [-3, -2],
// quartic on [3, 4], sine on [-pi, pi], all with dense_count = 201.

ExperimentReport run_cubic_experiment();
ExperimentReport run_quartic_experiment();

/// n_points must be 5 or 9.
ExperimentReport run_sine_experiment(std::size_t n_points);

/// One row of the flat figure dataset; exactly one of analytic/model is set
/// for curve rows, feed rows carry the sampled value in `analytic`.
struct FigureRow {
    std::string series;
    double x = 0.0;
    std::optional<double> analytic;
    std::optional<double> model;
};

/// Flattens a report into the three plot series: feed, analytic, model.
std::vector<FigureRow> emit_figure_data(const ExperimentReport& report);

} // namespace uie
