#include "artifacts.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "serieslab/errors.hpp"
#include "serieslab/exact_models.hpp"
#include "serieslab/integrate.hpp"

namespace serieslab::lab::detail {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

void write_file(const std::filesystem::path& path, const std::string& content)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

CsvTable trajectory_table(const Trajectory& tr, const std::string& model_label)
{
    CsvTable t;
    t.meta.emplace_back("model", model_label);
    t.meta.emplace_back("provenance", std::string(to_string(tr.provenance)));
    for (const auto& [k, v] : tr.meta)
        if (k != "model")
            t.meta.emplace_back(k, v);
    t.header.push_back("t");
    for (const auto& c : tr.component_names)
        t.header.push_back(c);
    for (std::size_t i = 0; i < tr.size(); ++i) {
        std::vector<double> row{tr.times[i]};
        row.insert(row.end(), tr.states[i].begin(), tr.states[i].end());
        t.rows.push_back(std::move(row));
    }
    return t;
}

CsvTable coefficient_table(const SeriesSolution& sol)
{
    CsvTable t;
    t.meta.emplace_back("model", sol.model.label);
    t.meta.emplace_back("order", std::to_string(sol.order()));
    t.header.push_back("k");
    for (const auto& c : sol.model.component_names())
        t.header.push_back(c);
    for (std::size_t k = 0; k <= sol.order(); ++k) {
        std::vector<double> row{static_cast<double>(k)};
        for (const auto& comp : sol.components)
            row.push_back(comp[k]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<Point> phase_points(const Trajectory& tr)
{
    std::vector<Point> pts;
    pts.reserve(tr.size());
    for (const auto& s : tr.states)
        pts.push_back({s[0], s[1]});
    return pts;
}

std::vector<Point> lv_closed_orbit(const ModelInstance& model, double tol, std::size_t points)
{
    const auto p = lotka_volterra_params(model);
    const Point centre{p.c / p.d, p.a / p.b};
    auto angle = [&](const std::vector<double>& s) { return std::atan2(s[1] - centre[1], s[0] - centre[0]); };

    // Find the first time the polar angle about the centre has swept a full
    // turn, doubling the window until it has.
    const std::size_t probe = 4000;
    double span = 4.0 * std::numbers::pi / std::sqrt(p.a * p.c);
    for (int attempt = 0; attempt < 12; ++attempt, span *= 2.0) {
        const auto tr = reference_integrate(model, span, tol, {.grid = uniform_grid(span, probe), .abs_tol = 1e-300});
        double swept = 0.0;
        double prev = angle(tr.states[0]);
        for (std::size_t i = 1; i < tr.size(); ++i) {
            const double a = angle(tr.states[i]);
            double d = a - prev;
            if (d > std::numbers::pi)
                d -= 2 * std::numbers::pi;
            if (d < -std::numbers::pi)
                d += 2 * std::numbers::pi;
            swept += d;
            prev = a;
            if (std::abs(swept) >= 2 * std::numbers::pi) {
                // Stop short of the closing sample so the polygon does not
                // overlap its own start.
                const double t_last = tr.times[i - 1];
                const auto orbit = reference_integrate(model, t_last, tol,
                                                       {.grid = uniform_grid(t_last, points), .abs_tol = 1e-300});
                return phase_points(orbit);
            }
        }
    }
    throw AnalysisError("lv_closed_orbit: orbit did not close");
}

CsvTable sir_exact_curve(const ModelInstance& model, std::size_t points)
{
    const auto ends = sir_endpoints(model);
    const double x0 = model.initial_state[0];
    CsvTable t;
    t.meta.emplace_back("model", model.label);
    t.meta.emplace_back("provenance", "exact");
    t.header = {"x", "y", "z"};
    for (std::size_t i = 0; i < points; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(points - 1);
        const double x = ends.x_limit + (x0 - ends.x_limit) * s * s;
        t.rows.push_back({x, sir_y_of_x(x, model), sir_z_of_x(x, model)});
    }
    return t;
}

CsvTable sir_series_curve(const ModelInstance& model, const Trajectory& series)
{
    CsvTable t;
    t.meta.emplace_back("model", model.label);
    for (const auto& [k, v] : series.meta)
        if (k != "model")
            t.meta.emplace_back(k, v);
    t.meta.emplace_back("rows", "series x(t) on the time grid; exact y(x), z(x) at that x");
    t.header = {"x", "y_exact", "z_exact", "y_series", "z_series"};
    for (const auto& s : series.states) {
        const double x = s[0];
        const bool defined = x > 0 && std::isfinite(x);
        t.rows.push_back({x, defined ? sir_y_of_x(x, model) : nan, defined ? sir_z_of_x(x, model) : nan, s[1], s[2]});
    }
    return t;
}

Plot sir_curve_plot(const std::string& title, const CsvTable& exact, const CsvTable& series, double x0)
{
    Plot plot;
    plot.title = title;
    plot.x_label = "susceptibles x";
    plot.y_label = "population";
    PlotSeries ye{"y(x) exact", {}, palette[0]}, ze{"z(x) exact", {}, palette[1]};
    PlotSeries ys{"y series", {}, palette[0], true, false}, zs{"z series", {}, palette[1], true, false};
    for (const auto& r : exact.rows) {
        ye.points.push_back({r[0], r[1]});
        ze.points.push_back({r[0], r[2]});
    }
    for (const auto& r : series.rows) {
        ys.points.push_back({r[0], r[3]});
        zs.points.push_back({r[0], r[4]});
    }
    plot.series = {ye, ze, ys, zs};
    plot.x_range = std::pair{-0.05 * x0, 1.05 * x0};
    return plot;
}

Plot time_plot(const std::string& title, const Trajectory& truth, const std::string& truth_label,
               const std::vector<std::pair<const Trajectory*, std::string>>& others)
{
    Plot plot;
    plot.title = title;
    plot.x_label = "t";
    plot.y_label = "state";
    const auto names = truth.component_names;
    for (std::size_t c = 0; c < names.size(); ++c) {
        PlotSeries s{names[c] + " " + truth_label, {}, palette[c % 6]};
        for (std::size_t i = 0; i < truth.size(); ++i)
            s.points.push_back({truth.times[i], truth.states[i][c]});
        plot.series.push_back(std::move(s));
    }
    std::size_t style = 0;
    for (const auto& [tr, label] : others) {
        for (std::size_t c = 0; c < names.size(); ++c) {
            PlotSeries s{names[c] + " " + label, {}, palette[(c + 3 * style) % 6], true, false};
            for (std::size_t i = 0; i < tr->size(); ++i)
                s.points.push_back({tr->times[i], tr->states[i][c]});
            plot.series.push_back(std::move(s));
        }
        ++style;
    }
    plot.x_range = std::pair{0.0, truth.times.back()};
    return plot;
}

}  // namespace serieslab::lab::detail
