#include "serieslab/trajectory.hpp"

#include "serieslab/errors.hpp"

namespace serieslab {

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::series: return "series";
    case Provenance::multistage: return "multistage";
    case Provenance::reference: return "reference";
    case Provenance::exact: return "exact";
    }
    return "unknown";
}

std::vector<double> Trajectory::component(std::size_t c) const
{
    std::vector<double> out;
    out.reserve(states.size());
    for (const auto& row : states)
        out.push_back(row.at(c));
    return out;
}

void Trajectory::check_invariants() const
{
    if (times.size() != states.size())
        throw InvalidArgument("Trajectory: times and states differ in length");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw InvalidArgument("Trajectory: times not strictly increasing at index " +
                                  std::to_string(i));
    for (const auto& row : states)
        if (row.size() != component_names.size())
            throw InvalidArgument("Trajectory: state row has wrong dimension");
}

}  // namespace serieslab
