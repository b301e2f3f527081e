#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "serieslab/lab/config.hpp"
#include "serieslab/lab/report.hpp"

namespace serieslab::lab {

enum class OutputFormat { csv, svg, both };

OutputFormat parse_output_format(std::string_view s);

struct RunOptions {
    /// Where artifacts go; empty means compute the report only.
    std::filesystem::path out_dir;
    OutputFormat format = OutputFormat::both;
    std::optional<std::size_t> order;  ///< overrides series.order
    std::optional<double> tol;         ///< overrides reference.tol
};

struct ScenarioResult {
    ComparisonReport report;
    std::map<std::string, double> quantities;
    std::vector<std::filesystem::path> files;
};

ScenarioConfig apply_overrides(ScenarioConfig config, const RunOptions& opts);

/// Runs series generation, reference and multistage integration and the
/// configured analyses, then writes CSV/SVG artifacts and the report.
/// Throws ConfigInvalid (before touching the file system) if the config,
/// after overrides, does not validate. Numeric failures do not throw; they
/// become failed report rows naming the operation.
ScenarioResult run_scenario(const ScenarioConfig& config, const RunOptions& opts = {});

/// Loads every *.yaml file in `dir`, sorted by file name. Throws ConfigInvalid
/// listing the problems of every file that fails to validate.
std::vector<ScenarioConfig> load_presets(const std::filesystem::path& dir);

struct ReportAllResult {
    ComparisonReport combined;
    std::vector<ScenarioResult> scenarios;
};

/// Runs the presets concurrently, each into out_dir/<name>, and aggregates
/// the rows in preset order. The combined report is written to out_dir.
ReportAllResult report_all(const std::vector<ScenarioConfig>& presets, const RunOptions& opts);

}  // namespace serieslab::lab
