// Acceptance suite: one line per criterion, nonzero exit if any fails.
// argv[1] must be the path to the command-line binary (used by criterion 11).

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/wait.h>
#endif

#include "uie/experiments.hpp"
#include "uie/io.hpp"
#include "uie/model.hpp"
#include "uie/stencil.hpp"
#include "uie/verification.hpp"

namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

int failures = 0;

void report(int number, const std::string& description, bool pass,
            const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
              << description;
    if (!detail.empty()) {
        std::cout << " (" << detail << ")";
    }
    std::cout << '\n';
    if (!pass) {
        ++failures;
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(5);
    os << v;
    return os.str();
}

bool d_vector_matches(const uie::RealVector& d, const double (&expected)[5], double tol,
                      std::string& detail) {
    bool ok = d.size() == 5;
    double worst = 0.0;
    for (std::size_t m = 0; ok && m < 5; ++m) {
        worst = std::max(worst, std::abs(d[m] - expected[m]));
    }
    ok = ok && worst <= tol;
    detail = "max deviation " + fmt(worst) + ", tol " + fmt(tol);
    return ok;
}

// Criteria 1-2.
void check_d_vectors() {
    const uie::ExperimentReport cubic = uie::run_cubic_experiment();
    const double cubic_expected[5] = {-32.875, 47.25, -41.0, 18.0, 0.0};
    std::string detail;
    bool ok = d_vector_matches(cubic.d_vector.d, cubic_expected, 0.02, detail);
    report(1, "cubic D-vector within 0.02 of (-32.875, 47.25, -41, 18, 0)", ok, detail);

    const uie::ExperimentReport quartic = uie::run_quartic_experiment();
    const double quartic_expected[5] = {907.1875, 978.75, 800.0, 438.0, 120.0};
    ok = d_vector_matches(quartic.d_vector.d, quartic_expected, 0.02, detail);
    report(2, "quartic D-vector within 0.02 of (907.1875, 978.75, 800, 438, 120)", ok,
           detail);
}

// Criteria 3-4.
void check_extrapolation_envelopes() {
    struct Probe {
        double x;
        double rel_tol;
    };
    const Probe probes[] = {{999.0, 1e-9}, {9999.0, 1e-8}};

    {
        const uie::TestFunction f = uie::TestFunction::cubic(3, 2, 1, 4);
        const uie::TaylorModel model = uie::fit(uie::generate_samples(f, -3.0, -2.0, 5));
        bool ok = std::abs(uie::eval_test_function(f, 999.0) - 2.99300600206e9) <= 1.0;
        std::string detail;
        for (const Probe& p : probes) {
            const double analytic = uie::eval_test_function(f, p.x);
            const double rel = std::abs(uie::evaluate(model, p.x) - analytic) /
                               std::abs(analytic);
            ok = ok && rel <= p.rel_tol;
            detail += (detail.empty() ? "" : ", ") + std::string("x=") + fmt(p.x) +
                      " rel err " + fmt(rel);
        }
        report(3, "cubic extrapolation: rel err <= 1e-9 at 999 and <= 1e-8 at 9999", ok,
               detail);
    }
    {
        const uie::TestFunction f = uie::TestFunction::quartic(5, 3, 1, 4, 2);
        const uie::TaylorModel model = uie::fit(uie::generate_samples(f, 3.0, 4.0, 5));
        bool ok = uie::eval_test_function(f, 999.0) == 4.983021991001e12;
        std::string detail;
        for (const Probe& p : probes) {
            const double analytic = uie::eval_test_function(f, p.x);
            const double rel = std::abs(uie::evaluate(model, p.x) - analytic) /
                               std::abs(analytic);
            ok = ok && rel <= p.rel_tol;
            detail += (detail.empty() ? "" : ", ") + std::string("x=") + fmt(p.x) +
                      " rel err " + fmt(rel);
        }
        report(4, "quartic extrapolation: rel err <= 1e-9 at 999 and <= 1e-8 at 9999", ok,
               detail);
    }
}

// Criteria 5-6.
void check_sine_probes() {
    const uie::TaylorModel five =
        uie::fit(uie::generate_samples(uie::TestFunction::sine(), -pi, pi, 5));
    const double five_a = uie::evaluate(five, 2.0 * pi / 3.0);
    const double five_b = uie::evaluate(five, 5.0 * pi / 6.0);
    report(5, "5-point sine model: 0.9876 +/- 0.002 at 2pi/3, 0.6790 +/- 0.002 at 5pi/6",
           std::abs(five_a - 0.9876) <= 0.002 && std::abs(five_b - 0.6790) <= 0.002,
           "got " + fmt(five_a) + " and " + fmt(five_b));

    const uie::TaylorModel nine =
        uie::fit(uie::generate_samples(uie::TestFunction::sine(), -pi, pi, 9));
    const double nine_a = uie::evaluate(nine, 2.0 * pi / 3.0);
    const double nine_b = uie::evaluate(nine, 5.0 * pi / 6.0);
    report(6, "9-point sine model: 0.8658 +/- 0.0005 at 2pi/3, 0.5006 +/- 0.0005 at 5pi/6",
           std::abs(nine_a - 0.8658) <= 0.0005 && std::abs(nine_b - 0.5006) <= 0.0005,
           "got " + fmt(nine_a) + " and " + fmt(nine_b));
}

// Criterion 7.
void check_oracle_equivalence() {
    struct Grid {
        uie::TestFunction f;
        double lo, hi;
        std::size_t n;
    };
    const Grid grids[] = {
        {uie::TestFunction::cubic(3, 2, 1, 4), -3.0, -2.0, 5},
        {uie::TestFunction::quartic(5, 3, 1, 4, 2), 3.0, 4.0, 5},
        {uie::TestFunction::sine(), -pi, pi, 5},
        {uie::TestFunction::sine(), -pi, pi, 9},
    };
    std::mt19937 rng(987654321);
    double worst = 0.0;
    for (const Grid& g : grids) {
        const uie::SampleSet samples = uie::generate_samples(g.f, g.lo, g.hi, g.n);
        const uie::TaylorModel model = uie::fit(samples);
        const double width = g.hi - g.lo;
        std::uniform_real_distribution<double> probe(samples.x0 - 2.0 * width,
                                                     samples.x0 + 2.0 * width);
        for (int k = 0; k < 1000; ++k) {
            const double x = probe(rng);
            const double oracle = uie::lagrange_eval(samples, x);
            worst = std::max(worst, std::abs(uie::evaluate(model, x) - oracle) /
                                        std::max(1.0, std::abs(oracle)));
        }
    }
    report(7, "model matches barycentric Lagrange within 1e-8 over 1000 probes per grid",
           worst <= 1e-8, "worst rel diff " + fmt(worst));
}

// Criterion 8.
void check_stencil_weights() {
    const double h = 0.37;
    bool ok = true;
    double worst = 0.0;

    const uie::RealVector first = uie::stencil_weights(5, h, 1);
    const double first_expected[5] = {1.0, -8.0, 0.0, 8.0, -1.0};
    uie::RealVector brute_first(5);
    const auto c5 = uie::build_taylor_matrix(5, h);
    for (std::size_t j = 0; j < 5; ++j) {
        uie::RealVector unit(5, 0.0);
        unit[j] = 1.0;
        brute_first[j] = uie::solve_dense(c5.matrix, unit)[1];
    }
    for (std::size_t j = 0; j < 5; ++j) {
        const double expected = first_expected[j] / (12.0 * h);
        const double scale = std::max(std::abs(expected), 1.0 / (12.0 * h));
        worst = std::max(worst, std::abs(first[j] - expected) / scale);
        worst = std::max(worst, std::abs(brute_first[j] - expected) / scale);
    }

    const uie::RealVector second = uie::stencil_weights(3, h, 2);
    const double second_expected[3] = {1.0, -2.0, 1.0};
    const auto c3 = uie::build_taylor_matrix(3, h);
    for (std::size_t j = 0; j < 3; ++j) {
        uie::RealVector unit(3, 0.0);
        unit[j] = 1.0;
        const double brute = uie::solve_dense(c3.matrix, unit)[2];
        const double expected = second_expected[j] / (h * h);
        worst = std::max(worst, std::abs(second[j] - expected) / std::abs(expected));
        worst = std::max(worst, std::abs(brute - expected) / std::abs(expected));
    }

    ok = worst <= 1e-10;
    report(8, "stencil weights match (1,-8,0,8,-1)/12h and (1,-2,1)/h^2 via brute force",
           ok, "worst rel deviation " + fmt(worst));
}

// Criterion 9.
void check_polynomial_exactness() {
    std::mt19937 rng(20240803);
    std::uniform_int_distribution<int> coeff(-9, 9);
    const double widths[] = {0.5, 1.0, 2.0};
    const double centers[] = {-2.0, -0.5, 0.0, 0.75, 1.5, 2.5};

    bool nodes_ok = true;
    bool far_ok = true;
    std::string detail;
    for (std::size_t n : {3u, 5u, 7u, 9u}) {
        double worst_node = 0.0;
        double worst_far = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t degree = rng() % n; // 0 .. n-1
            std::vector<double> cs(degree + 1);
            for (double& c : cs) {
                c = static_cast<double>(coeff(rng));
            }
            if (cs.back() == 0.0) {
                cs.back() = 1.0;
            }
            const auto poly = [&cs](double x) {
                double acc = 0.0;
                for (std::size_t i = cs.size(); i-- > 0;) {
                    acc = acc * x + cs[i];
                }
                return acc;
            };

            const double width = widths[rng() % 3];
            const double center = centers[rng() % 6];
            std::vector<double> xs(n);
            std::vector<double> ys(n);
            for (std::size_t i = 0; i < n; ++i) {
                xs[i] = (center - width / 2.0) +
                        width * (static_cast<double>(i) / static_cast<double>(n - 1));
                ys[i] = poly(xs[i]);
            }
            const uie::TaylorModel model = uie::fit(uie::SampleSet::from_points(xs, ys));

            for (std::size_t i = 0; i < n; ++i) {
                const double expected = poly(xs[i]);
                worst_node = std::max(worst_node,
                                      std::abs(uie::evaluate(model, xs[i]) - expected) /
                                          std::max(1.0, std::abs(expected)));
            }
            std::uniform_real_distribution<double> probe(model.x0 - 10.0 * width,
                                                         model.x0 + 10.0 * width);
            for (int k = 0; k < 50; ++k) {
                const double x = probe(rng);
                const double expected = poly(x);
                worst_far = std::max(worst_far,
                                     std::abs(uie::evaluate(model, x) - expected) /
                                         std::max(1.0, std::abs(expected)));
            }
        }
        nodes_ok = nodes_ok && worst_node <= 1e-9;
        far_ok = far_ok && worst_far <= 1e-8;
        detail += (detail.empty() ? "" : "; ") + std::string("N=") + std::to_string(n) +
                  " node " + fmt(worst_node) + " far " + fmt(worst_far);
    }
    report(9,
           "50 random polynomials per N in {3,5,7,9}: rel err <= 1e-9 on nodes, <= 1e-8 "
           "across 10x the feed range",
           nodes_ok && far_ok, detail);
}

// Criterion 10.
void check_sine_accuracy_claim() {
    double max_err[2] = {0.0, 0.0};
    const std::size_t counts[2] = {5, 9};
    for (int which = 0; which < 2; ++which) {
        const uie::TaylorModel model = uie::fit(
            uie::generate_samples(uie::TestFunction::sine(), -pi, pi, counts[which]));
        for (int i = 0; i <= 200; ++i) {
            const double x = -pi + 2.0 * pi * (static_cast<double>(i) / 200.0);
            max_err[which] = std::max(max_err[which],
                                      std::abs(std::sin(x) - uie::evaluate(model, x)));
        }
    }
    const bool ok = max_err[1] < max_err[0] && max_err[1] < 1e-3;
    report(10,
           "9-point sine max interpolation error on [-pi,pi] beats 5-point and stays "
           "under 1e-3",
           ok,
           "max5 " + fmt(max_err[0]) + ", max9 " + fmt(max_err[1]) + ", bound 0.001");
}

#if defined(__unix__) || defined(__APPLE__)
int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status == -1) {
        return -1;
    }
    if (WIFEXITED(status)) {
        return WEXITSTATUS(status);
    }
    return -1;
}
#else
int run_command(const std::string& command) { return std::system(command.c_str()); }
#endif

// Criterion 11.
void check_cli_round_trip(const std::string& cli) {
    if (cli.empty()) {
        report(11, "CLI sample -> fit -> eval round trip", false,
               "no CLI binary path supplied");
        return;
    }

    std::mt19937_64 salt(std::random_device{}());
    const fs::path dir = fs::temp_directory_path() /
                         ("uie_acceptance_" + std::to_string(salt()));
    fs::create_directories(dir);
    const std::string feed = (dir / "feed.csv").string();
    const std::string model = (dir / "model.json").string();
    const std::string eval = (dir / "eval.csv").string();

    bool ok = true;
    std::string detail;
    const std::string quiet = " > /dev/null 2>&1";
    const std::string steps[] = {
        "'" + cli + "' sample --function cubic:3,2,1,4 --range -3:-2 --n 5 --output '" +
            feed + "'" + quiet,
        "'" + cli + "' fit --input '" + feed + "' --output '" + model + "'" + quiet,
        "'" + cli + "' eval --model '" + model +
            "' --points -3,-2.75,-2.5,-2.25,-2 --output '" + eval + "'" + quiet,
    };
    for (int i = 0; ok && i < 3; ++i) {
        const int code = run_command(steps[i]);
        if (code != 0) {
            ok = false;
            detail = "stage " + std::to_string(i + 1) + " exited with " +
                     std::to_string(code);
        }
    }

    if (ok) {
        const uie::SampleSet samples = uie::read_sample_csv(feed);
        std::ifstream in(eval);
        std::string line;
        std::getline(in, line); // header
        double worst = 0.0;
        std::size_t row = 0;
        while (std::getline(in, line) && row < samples.n) {
            const std::size_t comma = line.find(',');
            const double value = std::stod(line.substr(comma + 1));
            worst = std::max(worst, std::abs(value - samples.ys[row]) /
                                        std::max(1.0, std::abs(samples.ys[row])));
            ++row;
        }
        ok = row == samples.n && worst <= 1e-8;
        detail = "worst node rel err " + fmt(worst);
    }

    std::error_code ec;
    fs::remove_all(dir, ec);
    report(11, "CLI sample -> fit -> eval round trip reproduces the feed values", ok,
           detail);
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    check_d_vectors();
    check_extrapolation_envelopes();
    check_sine_probes();
    check_oracle_equivalence();
    check_stencil_weights();
    check_polynomial_exactness();
    check_sine_accuracy_claim();
    check_cli_round_trip(cli);

    std::cout << (11 - failures) << "/11 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
