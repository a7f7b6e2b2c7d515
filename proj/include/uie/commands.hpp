#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uie/verification.hpp"

namespace uie {

struct CliConfig {
    enum class Command {
        Fit,
        Eval,
        Experiment,
        Sample,
    };
    enum class Format {
        Csv,
        Json,
    };

    Command command = Command::Fit;
    std::optional<std::filesystem::path> input_path;  // fit CSV / eval model document
    std::optional<std::filesystem::path> output_path;
    std::optional<std::filesystem::path> outdir;
    std::vector<double> points;
    std::optional<std::string> experiment_name;
    std::optional<std::string> function_spec;
    double range_lo = 0.0;
    double range_hi = 0.0;
    std::size_t n = 0;
    Format format = Format::Csv;
};

/// Parses "cubic:3,2,1,4", "quartic:5,3,1,4,2" or "sine".
TestFunction parse_function_spec(const std::string& spec);

/// Parses "x1,x2,..." into finite doubles.
std::vector<double> parse_points(const std::string& text);

/// Parses "lo:hi".
std::pair<double, double> parse_range(const std::string& text);

void cmd_fit(const CliConfig& config, std::ostream& out, std::ostream& err);
void cmd_eval(const CliConfig& config, std::ostream& out);
void cmd_experiment(const CliConfig& config, std::ostream& out);
void cmd_sample(const CliConfig& config);

} // namespace uie
