#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "serieslab/lab/scenario.hpp"

namespace serieslab::lab {

enum class FigureId {
    fig1,  ///< prey/predator populations against time, Case I
    fig2,  ///< prey-predator phase plane, Case V
    fig3,  ///< SIR y(x), z(x), slow epidemic
    fig4,  ///< SIR y(x), z(x), unit rates
};

FigureId parse_figure_id(std::string_view s);
std::string_view to_string(FigureId id);

struct FigureResult {
    std::string id;
    std::string caption;
    /// Scalar facts about the drawn curves (sign changes, crossings, ...).
    std::map<std::string, double> facts;
    std::vector<std::filesystem::path> files;
    std::string svg;
};

/// Rebuilds one figure comparing an order-`order` series with the exact or
/// reference solution. Files are written only when out_dir is non-empty.
FigureResult reproduce_figure(FigureId id, const std::filesystem::path& out_dir = {},
                              OutputFormat format = OutputFormat::both, std::size_t order = 5);

}  // namespace serieslab::lab
