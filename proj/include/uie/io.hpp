#pragma once

#include <filesystem>
#include <span>
#include <string>

#include <json.hpp>

#include "uie/experiments.hpp"
#include "uie/model.hpp"
#include "uie/stencil.hpp"

namespace uie {

/// Round-trip-safe decimal rendering of a double (17 significant digits).
std::string format_double(double value);

/// Reads a `x,y` CSV (header required, \n or \r\n) into a validated SampleSet.
SampleSet read_sample_csv(const std::filesystem::path& path);

void write_sample_csv(const std::filesystem::path& path, const SampleSet& samples);

nlohmann::json model_to_json(const TaylorModel& model);
TaylorModel model_from_json(const nlohmann::json& doc);

void write_model_document(const std::filesystem::path& path, const TaylorModel& model);
TaylorModel read_model_document(const std::filesystem::path& path);

nlohmann::json report_to_json(const ExperimentReport& report);

/// Writes the flat `series,x,analytic,model` figure dataset.
void write_figure_csv(const std::filesystem::path& path, std::span<const FigureRow> rows);

} // namespace uie
