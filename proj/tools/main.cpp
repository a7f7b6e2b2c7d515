#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "uie/commands.hpp"
#include "uie/errors.hpp"

namespace {

// Exit codes: 0 success, 2 parse/IO, 3 invalid sample set, 4 singular
// system, 5 bad arguments.
int run(int argc, char** argv) {
    CLI::App app{"Taylor-polynomial interpolation/extrapolation models fit at the "
                 "midpoint of odd equidistant samples"};
    app.require_subcommand(1);

    uie::CliConfig config;
    std::string points_text;
    std::string range_text;
    std::string format_text = "csv";

    CLI::App* fit = app.add_subcommand("fit", "Fit a model to an x,y CSV file");
    fit->add_option("--input", config.input_path, "Sample CSV with header x,y")->required();
    fit->add_option("--output", config.output_path, "Model document (JSON) to write")->required();

    CLI::App* eval = app.add_subcommand("eval", "Evaluate a fitted model at points");
    eval->add_option("--model", config.input_path, "Model document (JSON)")->required();
    eval->add_option("--points", points_text, "Comma-separated x values")->required();
    eval->add_option("--output", config.output_path, "Output file (default: stdout)");
    eval->add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* experiment = app.add_subcommand("experiment", "Run a built-in experiment");
    experiment->add_option("--name", config.experiment_name, "cubic, quartic, sine5 or sine9")
        ->required();
    experiment->add_option("--outdir", config.outdir, "Directory for report and figure files")
        ->required();

    CLI::App* sample = app.add_subcommand("sample", "Generate feed data from a test function");
    sample->add_option("--function", config.function_spec,
                       "cubic:a,b,c,d | quartic:a,b,c,d,f | sine")
        ->required();
    sample->add_option("--range", range_text, "lo:hi")->required();
    sample->add_option("--n", config.n, "Odd point count")->required();
    sample->add_option("--output", config.output_path, "Feed CSV to write")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 5; // help/version exit cleanly
    }

    try {
        if (fit->parsed()) {
            config.command = uie::CliConfig::Command::Fit;
            uie::cmd_fit(config, std::cout, std::cerr);
        } else if (eval->parsed()) {
            config.command = uie::CliConfig::Command::Eval;
            config.points = uie::parse_points(points_text);
            config.format = format_text == "json" ? uie::CliConfig::Format::Json
                                                  : uie::CliConfig::Format::Csv;
            uie::cmd_eval(config, std::cout);
        } else if (experiment->parsed()) {
            config.command = uie::CliConfig::Command::Experiment;
            uie::cmd_experiment(config, std::cout);
        } else {
            config.command = uie::CliConfig::Command::Sample;
            const auto [lo, hi] = uie::parse_range(range_text);
            config.range_lo = lo;
            config.range_hi = hi;
            uie::cmd_sample(config);
        }
    } catch (const uie::FileNotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const uie::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const uie::InvalidSampleSet& e) {
        std::cerr << "error: invalid sample set: " << e.what() << '\n';
        return 3;
    } catch (const uie::SingularMatrix& e) {
        std::cerr << "error: singular system: " << e.what() << '\n';
        return 4;
    } catch (const uie::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
