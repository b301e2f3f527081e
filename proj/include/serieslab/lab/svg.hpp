#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "serieslab/lab/geometry.hpp"

namespace serieslab::lab {

struct PlotSeries {
    std::string label;
    std::vector<Point> points;  ///< non-finite points break the line
    std::string color = "#1f77b4";
    bool dashed = false;
    /// Whether this series takes part in automatic axis ranging. Diverging
    /// curves are left out so that they leave the frame instead of
    /// squashing everything else.
    bool fit = true;
};

/// Static line plot rendered straight to SVG: framed axes with ticks,
/// polylines clipped to the frame, and a legend.
struct Plot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::optional<std::pair<double, double>> x_range;
    std::optional<std::pair<double, double>> y_range;
    std::vector<PlotSeries> series;

    std::string render(int width = 720, int height = 480) const;
};

}  // namespace serieslab::lab
