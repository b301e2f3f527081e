#include "serieslab/lab/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "artifacts.hpp"
#include "serieslab/convergence.hpp"
#include "serieslab/exact_models.hpp"
#include "serieslab/integrate.hpp"
#include "serieslab/lab/csv.hpp"

namespace serieslab::lab {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Order and window used when the radius has to be estimated from
// coefficients rather than known in closed form.
constexpr std::size_t radius_estimate_order = 30;
constexpr std::size_t radius_estimate_window = 8;

struct Outcome {
    std::map<std::string, double> values;
    std::map<std::string, std::string> missing;  // quantity -> why
    std::vector<std::string> failures;           // "operation: message"

    template <class F>
    bool attempt(const std::string& operation, std::initializer_list<std::string> quantities, F&& f)
    {
        try {
            f();
            return true;
        } catch (const std::exception& e) {
            const std::string note = operation + ": " + e.what();
            failures.push_back(note);
            for (const auto& q : quantities)
                missing.emplace(q, note);
            return false;
        }
    }
};

std::string join_state(const std::vector<double>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + format_number(v[i]);
    return out + "]";
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return std::isnan(m) ? inf : m;
}

double population_drift(const Trajectory& tr)
{
    const auto& s0 = tr.states.front();
    const double total = s0[0] + s0[1] + s0[2];
    double drift = 0.0;
    for (const auto& s : tr.states)
        drift = std::max(drift, std::abs(s[0] + s[1] + s[2] - total));
    return drift;
}

// Smallest local radius of convergence along the closed-form Riccati
// trajectory: grid scan, then Brent refinement around the best sample.
std::pair<double, double> riccati_local_radius_min(double y0, const std::vector<double>& grid)
{
    auto radius_at = [&](double t) { return riccati_radius(riccati_exact(y0, t)).radius.value_or(inf); };
    std::size_t best = 0;
    double best_r = inf;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = radius_at(grid[i]);
        if (r < best_r) {
            best_r = r;
            best = i;
        }
    }
    if (!std::isfinite(best_r))
        return {grid.front(), inf};
    const double lo = grid[best == 0 ? 0 : best - 1];
    const double hi = grid[std::min(best + 1, grid.size() - 1)];
    std::uintmax_t iters = 200;
    const auto [t, r] = boost::math::tools::brent_find_minima(radius_at, lo, hi, 52, iters);
    return r < best_r ? std::pair{t, r} : std::pair{grid[best], best_r};
}

}  // namespace

OutputFormat parse_output_format(std::string_view s)
{
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "svg")
        return OutputFormat::svg;
    if (s == "both")
        return OutputFormat::both;
    throw InvalidArgument("unknown output format '" + std::string(s) + "' (csv, svg or both)");
}

ScenarioConfig apply_overrides(ScenarioConfig config, const RunOptions& opts)
{
    if (opts.order)
        config.series_order = *opts.order;
    if (opts.tol)
        config.reference_tol = *opts.tol;
    return config;
}

ScenarioResult run_scenario(const ScenarioConfig& raw, const RunOptions& opts)
{
    const ScenarioConfig cfg = apply_overrides(raw, opts);
    if (auto errs = validate(cfg); !errs.empty())
        throw ConfigInvalid(std::move(errs));

    const ModelInstance model = cfg.model_instance();
    const auto names = model.component_names();
    const auto grid = uniform_grid(cfg.t_end, cfg.samples);
    Outcome out;

    ComparisonReport report;
    report.scenario = cfg.name;
    report.meta["model"] = std::string(to_string(cfg.model));
    report.meta["initial_state"] = join_state(cfg.initial_state);
    for (const auto& [k, v] : cfg.params)
        report.meta["param." + k] = format_number(v);
    report.meta["series_order"] = std::to_string(cfg.series_order);
    report.meta["reference_tol"] = format_number(cfg.reference_tol);
    report.meta["grid"] = "t_end=" + format_number(cfg.t_end) + " samples=" + std::to_string(cfg.samples);
    if (cfg.multistage)
        report.meta["multistage"] =
            "order=" + std::to_string(cfg.multistage->order) + " step=" + format_number(cfg.multistage->step);

    const SeriesSolution series = generate_taylor_solution(model, cfg.series_order);
    Trajectory series_tr = sample_series(series, grid);
    series_tr.meta["model"] = model.label;

    ReferenceOptions ref_opts{.grid = grid, .abs_tol = cfg.reference_abs_tol};
    std::optional<Trajectory> reference, exact;
    out.attempt("reference_integrate", {}, [&] {
        reference = reference_integrate(model, cfg.t_end, cfg.reference_tol, ref_opts);
    });
    if (cfg.model == ModelKind::riccati)
        out.attempt("riccati_exact", {}, [&] { exact = riccati_exact_trajectory(cfg.initial_state[0], grid); });

    // Closed form where there is one, the reference integrator otherwise.
    const Trajectory* truth = exact ? &*exact : reference ? &*reference : nullptr;
    const std::string truth_op = cfg.model == ModelKind::riccati ? "riccati_exact" : "reference_integrate";
    auto need_truth = [&] {
        if (!truth)
            throw NumericError(truth_op + " produced no trajectory");
    };

    out.attempt("sample_series", {"series_end_error"}, [&] {
        need_truth();
        out.values["series_end_error"] = max_abs_diff(series_tr.back(), truth->back());
    });
    for (std::size_t c = 0; c < names.size(); ++c)
        out.attempt(truth_op, {"end_value." + names[c]}, [&] {
            need_truth();
            out.values["end_value." + names[c]] = truth->back()[c];
        });

    if (cfg.model == ModelKind::sir) {
        out.attempt("reference_integrate", {"population_drift_reference"}, [&] {
            if (!reference)
                throw NumericError("no reference trajectory");
            out.values["population_drift_reference"] = population_drift(*reference);
        });
        out.values["population_drift_series"] = population_drift(series_tr);
    }

    std::optional<Trajectory> multistage;
    if (cfg.multistage) {
        std::initializer_list<std::string> qs{"multistage_end_error"};
        std::vector<std::string> value_names;
        for (const auto& n : names)
            value_names.push_back("multistage_end_value." + n);
        const bool ok = out.attempt("multistage_taylor", qs, [&] {
            multistage = multistage_taylor(model, cfg.multistage->order, cfg.multistage->step, cfg.t_end);
            need_truth();
            out.values["multistage_end_error"] = max_abs_diff(multistage->back(), truth->back());
            for (std::size_t c = 0; c < names.size(); ++c)
                out.values[value_names[c]] = multistage->back()[c];
        });
        if (!ok)
            for (const auto& n : value_names)
                out.missing.emplace(n, out.missing.at("multistage_end_error"));
    }

    if (cfg.has(Analysis::radius)) {
        const auto estimate = [&] {
            const auto long_series = generate_taylor_solution(model, radius_estimate_order);
            std::optional<RadiusReport> best;
            for (const auto& comp : long_series.components) {
                try {
                    auto r = estimate_radius(comp, radius_estimate_window);
                    if (!best || r.value() < best->value())
                        best = std::move(r);
                } catch (const NotEstimableError&) {
                    // a component with vanishing tail coefficients says nothing
                }
            }
            if (!best)
                throw NotEstimableError("no component has a usable coefficient tail");
            return *best;
        };
        if (cfg.model == ModelKind::riccati) {
            const double y0 = cfg.initial_state[0];
            out.attempt("riccati_radius", {"radius"}, [&] {
                const auto r = riccati_radius(y0);
                out.values["radius"] = r.value();
                report.meta["radius_method"] = r.detail;
            });
            out.attempt("estimate_radius", {"radius_estimate"}, [&] {
                const auto r = estimate();
                out.values["radius_estimate"] = r.value();
                report.meta["radius_estimate_method"] = r.detail;
            });
            out.attempt("riccati_local_radius_min", {"local_radius_min"}, [&] {
                const auto [t, r] = riccati_local_radius_min(y0, grid);
                out.values["local_radius_min"] = r;
                report.meta["local_radius_argmin"] = format_number(t);
            });
        } else {
            out.attempt("estimate_radius", {"radius"}, [&] {
                const auto r = estimate();
                out.values["radius"] = r.value();
                report.meta["radius_method"] = r.detail;
            });
        }
    }

    std::optional<CsvTable> sir_exact, sir_series;
    if (cfg.has(Analysis::endpoints)) {
        out.attempt("sir_endpoints", {"x_limit", "x_over", "x_peak", "y_peak", "threshold"}, [&] {
            const auto e = sir_endpoints(model);
            const auto p = sir_params(model);
            out.values["x_limit"] = e.x_limit;
            out.values["threshold"] = p.threshold();
            const std::string none = "sir_endpoints: no epidemic (x0 <= gamma/beta), value undefined";
            if (e.x_over)
                out.values["x_over"] = *e.x_over;
            else
                out.missing.emplace("x_over", none);
            if (e.x_peak && e.y_peak) {
                out.values["x_peak"] = *e.x_peak;
                out.values["y_peak"] = *e.y_peak;
            } else {
                out.missing.emplace("x_peak", none);
                out.missing.emplace("y_peak", none);
            }
            report.meta["x_over_caveat"] =
                "x_over marks infectives returning to their initial count; it is an end-of-epidemic "
                "marker only when the initial infectives are few";
        });
        out.attempt("sir_curves", {}, [&] {
            sir_exact = detail::sir_exact_curve(model);
            sir_series = detail::sir_series_curve(model, series_tr);
        });
    }

    if (cfg.has(Analysis::conserved)) {
        const auto p = lotka_volterra_params(model);
        const double h0 = lv_conserved(cfg.initial_state[0], cfg.initial_state[1], p);
        out.attempt("lv_conserved", {"conserved_drift_reference", "reference_min_x"}, [&] {
            if (!reference)
                throw NumericError("no reference trajectory");
            double drift = 0.0, min_x = inf;
            for (const auto& s : reference->states) {
                drift = std::max(drift, std::abs(lv_conserved(s[0], s[1], p) - h0));
                min_x = std::min(min_x, s[0]);
            }
            out.values["conserved_drift_reference"] = drift;
            out.values["reference_min_x"] = min_x;
        });
        double violation = 0.0, min_x = inf;
        for (const auto& s : series_tr.states) {
            min_x = std::min(min_x, s[0]);
            // Outside the open positive quadrant the invariant has no value:
            // count that as an unbounded violation.
            violation = std::max(violation, s[0] > 0 && s[1] > 0 ? std::abs(lv_conserved(s[0], s[1], p) - h0) : inf);
        }
        out.values["conserved_violation_series"] = violation;
        out.values["series_min_x"] = min_x;
    }

    std::vector<Point> orbit;
    if (cfg.has(Analysis::phase_plane)) {
        const auto pts = detail::phase_points(series_tr);
        out.values["series_crossings"] = static_cast<double>(count_self_intersections(pts));
        out.attempt("lv_closed_orbit", {"reference_crossings"}, [&] {
            orbit = detail::lv_closed_orbit(model, cfg.reference_tol);
            out.values["reference_crossings"] = static_cast<double>(count_self_intersections(orbit, true));
        });
    }

    for (const auto& check : cfg.checks) {
        if (auto it = out.values.find(check.quantity); it != out.values.end())
            report.rows.push_back(evaluate_check(check, it->second));
        else if (auto m = out.missing.find(check.quantity); m != out.missing.end())
            report.rows.push_back(failed_row(check, m->second));
        else
            report.rows.push_back(failed_row(check, "not computed"));
    }
    // Failures nobody asked about still show up.
    for (const auto& f : out.failures) {
        const bool reported = std::any_of(report.rows.begin(), report.rows.end(),
                                          [&](const ReportRow& r) { return r.note == f; });
        if (!reported) {
            ReportRow row;
            row.quantity = "error:" + f.substr(0, f.find(':'));
            row.computed = row.reference = row.rel_error = std::numeric_limits<double>::quiet_NaN();
            row.criterion = "completes";
            row.locus = "numeric failure";
            row.note = f;
            report.rows.push_back(std::move(row));
        }
    }

    ScenarioResult result;
    result.quantities = out.values;
    result.report = std::move(report);
    if (opts.out_dir.empty())
        return result;

    const auto& dir = opts.out_dir;
    const bool csv = opts.format != OutputFormat::svg;
    const bool svg = opts.format != OutputFormat::csv;
    auto emit = [&](const std::string& file, const std::string& content) {
        detail::write_file(dir / file, content);
        result.files.push_back(dir / file);
    };

    if (csv) {
        emit("trajectory_series.csv", detail::trajectory_table(series_tr, model.label).render());
        emit("series_coefficients.csv", detail::coefficient_table(series).render());
        if (reference)
            emit("trajectory_reference.csv", detail::trajectory_table(*reference, model.label).render());
        if (exact)
            emit("trajectory_exact.csv", detail::trajectory_table(*exact, model.label).render());
        if (multistage)
            emit("trajectory_multistage.csv", detail::trajectory_table(*multistage, model.label).render());
        if (sir_series)
            emit("sir_curves.csv", sir_series->render());
        if (sir_exact)
            emit("sir_exact_curve.csv", sir_exact->render());
        if (!orbit.empty()) {
            CsvTable t;
            t.meta.emplace_back("model", model.label);
            t.meta.emplace_back("provenance", "reference");
            t.header = {"x", "y"};
            for (const auto& p : orbit)
                t.rows.push_back({p[0], p[1]});
            emit("phase_orbit_reference.csv", t.render());
        }
    }
    if (svg && truth) {
        std::vector<std::pair<const Trajectory*, std::string>> others{
            {&series_tr, "series N=" + std::to_string(cfg.series_order)}};
        if (multistage)
            others.emplace_back(&*multistage, "multistage");
        emit("time_series.svg",
             detail::time_plot(cfg.name, *truth, exact ? "exact" : "reference", others).render());
        if (cfg.has(Analysis::phase_plane) && !orbit.empty()) {
            Plot plot;
            plot.title = cfg.name + " phase plane";
            plot.x_label = names[0];
            plot.y_label = names[1];
            auto closed = orbit;
            closed.push_back(orbit.front());
            plot.series.push_back({"reference orbit", closed, detail::palette[0]});
            plot.series.push_back(
                {"series N=" + std::to_string(cfg.series_order), detail::phase_points(series_tr),
                 detail::palette[1], true, false});
            emit("phase_plane.svg", plot.render());
        }
        if (sir_exact && sir_series)
            emit("sir_curves.svg",
                 detail::sir_curve_plot(cfg.name, *sir_exact, *sir_series, cfg.initial_state[0]).render());
    }
    emit("report.txt", result.report.to_text());
    emit("report.csv", result.report.to_csv());
    return result;
}

std::vector<ScenarioConfig> load_presets(const std::filesystem::path& dir)
{
    std::vector<std::filesystem::path> files;
    if (!std::filesystem::is_directory(dir))
        throw ConfigInvalid({{dir.string(), "not a directory"}});
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".yaml")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<ScenarioConfig> out;
    std::vector<ConfigError> errors;
    for (const auto& f : files) {
        auto r = load_config_file(f);
        if (r.ok())
            out.push_back(std::move(*r.config));
        for (auto& e : r.errors)
            errors.push_back({f.filename().string() + ": " + e.path, e.message});
    }
    if (!errors.empty())
        throw ConfigInvalid(std::move(errors));
    return out;
}

ReportAllResult report_all(const std::vector<ScenarioConfig>& presets, const RunOptions& opts)
{
    for (std::size_t i = 0; i < presets.size(); ++i)
        for (std::size_t j = i + 1; j < presets.size(); ++j)
            if (presets[i].name == presets[j].name)
                throw ConfigInvalid({{"name", "duplicate scenario name '" + presets[i].name + "'"}});
    for (const auto& p : presets)
        if (auto errs = validate(apply_overrides(p, opts)); !errs.empty())
            throw ConfigInvalid(std::move(errs));

    std::vector<std::future<ScenarioResult>> jobs;
    for (const auto& p : presets) {
        RunOptions o = opts;
        if (!opts.out_dir.empty())
            o.out_dir = opts.out_dir / p.name;
        jobs.push_back(std::async(std::launch::async, [&p, o] { return run_scenario(p, o); }));
    }
    ReportAllResult all;
    std::vector<ComparisonReport> reports;
    for (auto& j : jobs) {
        all.scenarios.push_back(j.get());
        reports.push_back(all.scenarios.back().report);
    }
    all.combined = merge_reports(reports, "report-all");
    if (!opts.out_dir.empty()) {
        detail::write_file(opts.out_dir / "report_all.txt", all.combined.to_text());
        detail::write_file(opts.out_dir / "report_all.csv", all.combined.to_csv());
    }
    return all;
}

}  // namespace serieslab::lab
