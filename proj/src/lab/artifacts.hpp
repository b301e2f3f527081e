#pragma once

// Pieces shared by the scenario runner and the figure builders.

#include <filesystem>
#include <string>
#include <vector>

#include "serieslab/lab/csv.hpp"
#include "serieslab/lab/geometry.hpp"
#include "serieslab/lab/svg.hpp"
#include "serieslab/models.hpp"
#include "serieslab/trajectory.hpp"
#include "serieslab/truncated_series.hpp"

namespace serieslab::lab::detail {

inline const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

void write_file(const std::filesystem::path& path, const std::string& content);

CsvTable trajectory_table(const Trajectory& tr, const std::string& model_label);
CsvTable coefficient_table(const SeriesSolution& sol);

std::vector<Point> phase_points(const Trajectory& tr);

/// One revolution of a Lotka-Volterra orbit about its centre, traced with
/// the reference integrator. The polygon is implicitly closed.
std::vector<Point> lv_closed_orbit(const ModelInstance& model, double tol, std::size_t points = 1200);

/// Exact y(x), z(x) on a grid clustered towards x_limit.
CsvTable sir_exact_curve(const ModelInstance& model, std::size_t points = 600);

/// Series-parameterized curves: x, y, z from the series at each grid time,
/// with the exact y(x), z(x) at the same x (NaN where x <= 0).
CsvTable sir_series_curve(const ModelInstance& model, const Trajectory& series);

Plot sir_curve_plot(const std::string& title, const CsvTable& exact, const CsvTable& series, double x0);

/// Truth (solid, ranges the axes) against approximations (dashed), one
/// colour per component.
Plot time_plot(const std::string& title, const Trajectory& truth, const std::string& truth_label,
               const std::vector<std::pair<const Trajectory*, std::string>>& others);

}  // namespace serieslab::lab::detail
