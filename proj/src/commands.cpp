#include "uie/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "uie/experiments.hpp"
#include "uie/io.hpp"
#include "uie/model.hpp"

namespace uie {

namespace {

double parse_number(std::string_view text, const char* what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        std::ostringstream os;
        os << "cannot parse " << what << " '" << text << "'";
        throw ParseError(os.str(), 0);
    }
    return value;
}

std::vector<double> split_numbers(std::string_view text, const char* what, char sep) {
    std::vector<double> values;
    while (true) {
        const std::size_t pos = text.find(sep);
        values.push_back(parse_number(text.substr(0, pos), what));
        if (pos == std::string_view::npos) {
            break;
        }
        text.remove_prefix(pos + 1);
    }
    return values;
}

const char* kind_name(EvaluationKind kind) {
    return kind == EvaluationKind::Interpolation ? "interpolation" : "extrapolation";
}

// Terminal display rounding; files keep full round-trip precision.
std::string display(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

} // namespace

TestFunction parse_function_spec(const std::string& spec) {
    if (spec == "sine") {
        return TestFunction::sine();
    }
    const std::size_t colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<double> coeffs;
    if (colon != std::string::npos) {
        coeffs = split_numbers(std::string_view(spec).substr(colon + 1),
                               "function coefficient", ',');
    }
    if (name == "cubic" && coeffs.size() == 4) {
        return TestFunction::cubic(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
    }
    if (name == "quartic" && coeffs.size() == 5) {
        return TestFunction::quartic(coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]);
    }
    throw ParseError("function spec must be cubic:a,b,c,d or quartic:a,b,c,d,f or sine; got '" +
                         spec + "'",
                     0);
}

std::vector<double> parse_points(const std::string& text) {
    std::vector<double> points = split_numbers(text, "point", ',');
    for (double p : points) {
        if (!std::isfinite(p)) {
            throw NonFiniteInput("evaluation points must be finite");
        }
    }
    return points;
}

std::pair<double, double> parse_range(const std::string& text) {
    // lo:hi, where either bound may itself be negative.
    const std::size_t colon = text.find(':', 1);
    if (colon == std::string::npos) {
        throw ParseError("range must be lo:hi; got '" + text + "'", 0);
    }
    const double lo = parse_number(std::string_view(text).substr(0, colon), "range bound");
    const double hi = parse_number(std::string_view(text).substr(colon + 1), "range bound");
    return {lo, hi};
}

void cmd_fit(const CliConfig& config, std::ostream& out, std::ostream& err) {
    const SampleSet samples = read_sample_csv(config.input_path.value());
    if (samples.n > 11) {
        err << "warning: " << samples.n
            << " points; the coefficient matrix becomes ill-conditioned beyond 11\n";
    }
    const TaylorModel model = fit(samples);
    write_model_document(config.output_path.value(), model);

    const DerivativeEstimates estimates = estimate_derivatives(samples);
    out << "d_vector:";
    for (double d : estimates.d) {
        out << ' ' << display(d);
    }
    out << '\n';
}

void cmd_eval(const CliConfig& config, std::ostream& out) {
    const TaylorModel model = read_model_document(config.input_path.value());

    std::ostringstream body;
    if (config.format == CliConfig::Format::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (double x : config.points) {
            rows.push_back({{"x", x},
                            {"value", evaluate(model, x)},
                            {"kind", kind_name(classify(model, x))}});
        }
        body << rows.dump(2) << '\n';
    } else {
        body << "x,value,kind\n";
        for (double x : config.points) {
            body << format_double(x) << ',' << format_double(evaluate(model, x)) << ','
                 << kind_name(classify(model, x)) << '\n';
        }
    }

    if (config.output_path) {
        std::ofstream file(*config.output_path);
        if (!file) {
            throw FileNotFound("cannot open for writing: " + config.output_path->string());
        }
        file << body.str();
    } else {
        out << body.str();
    }
}

void cmd_experiment(const CliConfig& config, std::ostream& out) {
    const std::string& name = config.experiment_name.value();
    ExperimentReport report;
    if (name == "cubic") {
        report = run_cubic_experiment();
    } else if (name == "quartic") {
        report = run_quartic_experiment();
    } else if (name == "sine5") {
        report = run_sine_experiment(5);
    } else if (name == "sine9") {
        report = run_sine_experiment(9);
    } else {
        throw UnknownExperiment("unknown experiment '" + name +
                                "'; expected cubic, quartic, sine5 or sine9");
    }

    const std::filesystem::path outdir = config.outdir.value();
    std::filesystem::create_directories(outdir);
    const std::filesystem::path report_path = outdir / (name + "_report.json");
    const std::filesystem::path figure_path = outdir / (name + "_figure.csv");

    std::ofstream report_file(report_path);
    if (!report_file) {
        throw FileNotFound("cannot open for writing: " + report_path.string());
    }
    report_file << report_to_json(report).dump(2) << '\n';

    const std::vector<FigureRow> rows = emit_figure_data(report);
    write_figure_csv(figure_path, rows);

    out << name << ": wrote " << report_path.string() << " and " << figure_path.string()
        << '\n';
    for (const ErrorRow& row : report.error_table) {
        out << "  x=" << display(row.x) << " analytic=" << display(row.analytic)
            << " model=" << display(row.model_value) << " err=" << display(row.err) << '\n';
    }
}

void cmd_sample(const CliConfig& config) {
    const TestFunction f = parse_function_spec(config.function_spec.value());
    const SampleSet samples = generate_samples(f, config.range_lo, config.range_hi, config.n);
    write_sample_csv(config.output_path.value(), samples);
}

} // namespace uie
