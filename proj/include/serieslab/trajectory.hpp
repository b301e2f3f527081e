#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace serieslab {

enum class Provenance { series, multistage, reference, exact };

std::string_view to_string(Provenance p);

/// Ordered (t, state) samples. Times are strictly increasing and every state
/// row has one entry per component.
struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    Provenance provenance = Provenance::series;
    std::vector<std::string> component_names;
    /// Free-form run metadata (order, step, tolerance, ...), written to CSV
    /// comment lines.
    std::map<std::string, std::string> meta;

    std::size_t size() const noexcept { return times.size(); }
    std::size_t dimension() const noexcept { return component_names.size(); }
    const std::vector<double>& back() const { return states.back(); }
    /// Column `component` as a vector.
    std::vector<double> component(std::size_t component) const;

    /// Throws InvalidArgument if the structural invariants do not hold.
    void check_invariants() const;
};

}  // namespace serieslab
