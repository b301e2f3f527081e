#include "serieslab/lab/figures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "artifacts.hpp"
#include "serieslab/exact_models.hpp"
#include "serieslab/integrate.hpp"

namespace serieslab::lab {

namespace {

constexpr double figure_tol = 1e-10;

struct Emitter {
    std::filesystem::path dir;
    OutputFormat format;
    FigureResult& result;

    void csv(const std::string& file, const CsvTable& table)
    {
        if (dir.empty() || format == OutputFormat::svg)
            return;
        detail::write_file(dir / file, table.render());
        result.files.push_back(dir / file);
    }
    void svg(const std::string& file, const Plot& plot)
    {
        result.svg = plot.render();
        if (dir.empty() || format == OutputFormat::csv)
            return;
        detail::write_file(dir / file, result.svg);
        result.files.push_back(dir / file);
    }
};

double min_component(const Trajectory& tr, std::size_t c)
{
    double m = std::numeric_limits<double>::infinity();
    for (const auto& s : tr.states)
        m = std::min(m, s[c]);
    return m;
}

void populations_figure(Emitter& out, std::size_t order)
{
    // Case I: the prey is driven close to extinction, so the reference run
    // needs pure relative error control to keep it positive.
    const auto model = make_lotka_volterra_model({1, 1, 0.1, 1}, 14, 18, "lotka_volterra case I");
    const double t_end = 5.0;
    const auto grid = uniform_grid(t_end, 501);
    const auto reference = reference_integrate(model, t_end, figure_tol, {.grid = grid, .abs_tol = 1e-300});
    auto series = sample_series(generate_taylor_solution(model, order), grid);
    series.meta["order"] = std::to_string(order);

    out.result.caption = "Case I populations: reference solution against the order-" + std::to_string(order) +
                         " time series";
    out.result.facts["series_min_x"] = min_component(series, 0);
    out.result.facts["reference_min_x"] = min_component(reference, 0);
    out.csv("fig1_reference.csv", detail::trajectory_table(reference, model.label));
    out.csv("fig1_series.csv", detail::trajectory_table(series, model.label));
    out.svg("fig1.svg", detail::time_plot("prey and predators, case I", reference, "reference",
                                          {{&series, "series N=" + std::to_string(order)}}));
}

void phase_figure(Emitter& out, std::size_t order)
{
    const auto model = make_lotka_volterra_model({1, 1, 1, 1}, 3, 2, "lotka_volterra case V");
    const double t_end = 6.0;
    const auto orbit = detail::lv_closed_orbit(model, figure_tol);
    auto series = sample_series(generate_taylor_solution(model, order), uniform_grid(t_end, 601));
    series.meta["order"] = std::to_string(order);
    const auto series_pts = detail::phase_points(series);

    out.result.caption = "Case V phase plane: closed reference orbit against the order-" + std::to_string(order) +
                         " series curve";
    out.result.facts["series_crossings"] = static_cast<double>(count_self_intersections(series_pts));
    out.result.facts["exact_crossings"] = static_cast<double>(count_self_intersections(orbit, true));

    CsvTable orbit_table;
    orbit_table.meta = {{"model", model.label}, {"provenance", "reference"}, {"closed", "true"}};
    orbit_table.header = {"x", "y"};
    for (const auto& p : orbit)
        orbit_table.rows.push_back({p[0], p[1]});
    out.csv("fig2_exact_orbit.csv", orbit_table);
    out.csv("fig2_series.csv", detail::trajectory_table(series, model.label));

    Plot plot;
    plot.title = "prey-predator phase plane, case V";
    plot.x_label = "x (prey)";
    plot.y_label = "y (predators)";
    auto closed = orbit;
    closed.push_back(orbit.front());
    plot.series.push_back({"exact orbit", closed, detail::palette[0]});
    plot.series.push_back({"series N=" + std::to_string(order), series_pts, detail::palette[1], true, false});
    // Framed on the orbit so the series loop near the start is visible.
    plot.x_range = std::pair{0.0, 6.0};
    plot.y_range = std::pair{0.0, 6.0};
    out.svg("fig2.svg", plot);
}

void sir_figure(Emitter& out, const std::string& id, const ModelInstance& model, double t_end, std::size_t order)
{
    auto series = sample_series(generate_taylor_solution(model, order), uniform_grid(t_end, 801));
    series.meta["order"] = std::to_string(order);
    series.meta["t_end"] = format_number(t_end);
    const auto exact = detail::sir_exact_curve(model);
    const auto curve = detail::sir_series_curve(model, series);

    double gap = 0.0;
    for (const auto& r : curve.rows)
        if (std::isfinite(r[1]))
            gap = std::max(gap, std::abs(r[3] - r[1]));
    out.result.caption = "SIR infectives and removed against susceptibles: exact curves against the order-" +
                         std::to_string(order) + " series";
    out.result.facts["x_limit"] = sir_endpoints(model).x_limit;
    out.result.facts["series_min_x"] = min_component(series, 0);
    out.result.facts["series_max_gap_y"] = gap;
    out.csv(id + "_curves.csv", curve);
    out.csv(id + "_exact_curve.csv", exact);
    out.svg(id + ".svg", detail::sir_curve_plot(model.label, exact, curve, model.initial_state[0]));
}

}  // namespace

FigureId parse_figure_id(std::string_view s)
{
    for (auto id : {FigureId::fig1, FigureId::fig2, FigureId::fig3, FigureId::fig4})
        if (to_string(id) == s)
            return id;
    throw InvalidArgument("unknown figure '" + std::string(s) + "' (fig1..fig4)");
}

std::string_view to_string(FigureId id)
{
    switch (id) {
    case FigureId::fig1: return "fig1";
    case FigureId::fig2: return "fig2";
    case FigureId::fig3: return "fig3";
    case FigureId::fig4: return "fig4";
    }
    return "?";
}

FigureResult reproduce_figure(FigureId id, const std::filesystem::path& out_dir, OutputFormat format,
                              std::size_t order)
{
    FigureResult result;
    result.id = std::string(to_string(id));
    Emitter out{out_dir, format, result};
    switch (id) {
    case FigureId::fig1: populations_figure(out, order); break;
    case FigureId::fig2: phase_figure(out, order); break;
    case FigureId::fig3:
        sir_figure(out, "fig3", make_sir_model({0.01, 0.02}, 20, 15, 10, "sir slow epidemic"), 30.0, order);
        break;
    case FigureId::fig4:
        sir_figure(out, "fig4", make_sir_model({1, 1}, 20, 4, 10, "sir unit rates"), 1.0, order);
        break;
    }
    return result;
}

}  // namespace serieslab::lab
