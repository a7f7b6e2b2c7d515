#include "uie/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

namespace uie {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_csv_number(std::string_view field, const std::filesystem::path& path, long line) {
    field = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        std::ostringstream os;
        os << path.string() << ":" << line << ": cannot parse number '" << field << "'";
        throw ParseError(os.str(), line);
    }
    return value;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw FileNotFound("cannot open for writing: " + path.string());
    }
    return out;
}

} // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

SampleSet read_sample_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileNotFound("cannot open: " + path.string());
    }

    std::vector<double> xs;
    std::vector<double> ys;
    std::string raw;
    long line_no = 0;
    bool saw_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (!saw_header) {
            if (line != "x,y") {
                std::ostringstream os;
                os << path.string() << ":" << line_no << ": expected header 'x,y', got '"
                   << line << "'";
                throw ParseError(os.str(), line_no);
            }
            saw_header = true;
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            std::ostringstream os;
            os << path.string() << ":" << line_no << ": expected exactly two comma-separated values";
            throw ParseError(os.str(), line_no);
        }
        xs.push_back(parse_csv_number(line.substr(0, comma), path, line_no));
        ys.push_back(parse_csv_number(line.substr(comma + 1), path, line_no));
    }
    if (!saw_header) {
        throw ParseError(path.string() + ":1: empty file, expected 'x,y' header", 1);
    }
    return SampleSet::from_points(std::move(xs), std::move(ys));
}

void write_sample_csv(const std::filesystem::path& path, const SampleSet& samples) {
    std::ofstream out = open_output(path);
    out << "x,y\n";
    for (std::size_t i = 0; i < samples.n; ++i) {
        out << format_double(samples.xs[i]) << ',' << format_double(samples.ys[i]) << '\n';
    }
}

nlohmann::json model_to_json(const TaylorModel& model) {
    return nlohmann::json{
        {"version", 1},
        {"x0", model.x0},
        {"dx", model.dx},
        {"n_points", model.n_points},
        {"coeffs", model.coeffs},
        {"range_lo", model.range_lo},
        {"range_hi", model.range_hi},
    };
}

TaylorModel model_from_json(const nlohmann::json& doc) {
    try {
        if (doc.at("version").get<int>() != 1) {
            throw ParseError("unsupported model document version", 0);
        }
        TaylorModel model;
        model.x0 = doc.at("x0").get<double>();
        model.dx = doc.at("dx").get<double>();
        model.n_points = doc.at("n_points").get<std::size_t>();
        model.coeffs = doc.at("coeffs").get<std::vector<double>>();
        model.range_lo = doc.at("range_lo").get<double>();
        model.range_hi = doc.at("range_hi").get<double>();
        if (model.coeffs.size() != model.n_points) {
            throw ParseError("model document coeffs length disagrees with n_points", 0);
        }
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed model document: ") + e.what(), 0);
    }
}

void write_model_document(const std::filesystem::path& path, const TaylorModel& model) {
    std::ofstream out = open_output(path);
    out << model_to_json(model).dump(2) << '\n';
}

TaylorModel read_model_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileNotFound("cannot open: " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
    return model_from_json(doc);
}

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json spec{
        {"feed_lo", report.spec.feed_lo},
        {"feed_hi", report.spec.feed_hi},
        {"n_points", report.spec.n_points},
        {"eval_lo", report.spec.eval_lo},
        {"eval_hi", report.spec.eval_hi},
        {"probe_points", report.spec.probe_points},
        {"dense_count", report.spec.dense_count},
    };
    switch (report.spec.test_function.kind) {
    case TestFunctionKind::Cubic: spec["function"] = "cubic"; break;
    case TestFunctionKind::Quartic: spec["function"] = "quartic"; break;
    case TestFunctionKind::Sine: spec["function"] = "sine"; break;
    }
    if (!report.spec.test_function.coefficients.empty()) {
        spec["function_coefficients"] = report.spec.test_function.coefficients;
    }

    nlohmann::json error_table = nlohmann::json::array();
    for (const ErrorRow& row : report.error_table) {
        error_table.push_back({{"x", row.x},
                               {"analytic", row.analytic},
                               {"model", row.model_value},
                               {"err", row.err}});
    }
    nlohmann::json dense = nlohmann::json::array();
    for (const DensePoint& p : report.dense_series) {
        dense.push_back({{"x", p.x}, {"analytic", p.analytic}, {"model", p.model}});
    }

    return nlohmann::json{
        {"name", report.name},
        {"spec", spec},
        {"feed", {{"x", report.feed.xs}, {"y", report.feed.ys}}},
        {"d_vector", report.d_vector.d},
        {"x0", report.model.x0},
        {"dx", report.model.dx},
        {"coeffs", report.model.coeffs},
        {"error_table", error_table},
        {"dense_series", dense},
    };
}

void write_figure_csv(const std::filesystem::path& path, std::span<const FigureRow> rows) {
    std::ofstream out = open_output(path);
    out << "series,x,analytic,model\n";
    for (const FigureRow& row : rows) {
        out << row.series << ',' << format_double(row.x) << ',';
        if (row.analytic) {
            out << format_double(*row.analytic);
        }
        out << ',';
        if (row.model) {
            out << format_double(*row.model);
        }
        out << '\n';
    }
}

} // namespace uie
