// serieslab: run scenarios, rebuild figures and query radii/endpoints.
//
// Exit status: 0 when every report row passes, 1 when any row fails or a
// computation breaks down, 2 for usage or configuration errors.

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "serieslab/convergence.hpp"
#include "serieslab/exact_models.hpp"
#include "serieslab/lab/csv.hpp"
#include "serieslab/lab/figures.hpp"
#include "serieslab/lab/scenario.hpp"
#include "serieslab/truncated_series.hpp"

namespace lab = serieslab::lab;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Common {
    std::string out;
    std::optional<std::size_t> order;
    std::optional<double> tol;
    std::string format = "both";

    lab::RunOptions options() const
    {
        lab::RunOptions o;
        o.out_dir = out;
        o.order = order;
        o.tol = tol;
        o.format = lab::parse_output_format(format);
        return o;
    }
};

void add_common(CLI::App* cmd, Common& c, bool with_tol = true)
{
    cmd->add_option("--out", c.out, "output directory");
    cmd->add_option("--order", c.order, "series order")->check(CLI::PositiveNumber);
    if (with_tol)
        cmd->add_option("--tol", c.tol, "reference integrator tolerance")->check(CLI::Range(1e-13, 1e-3));
    cmd->add_option("--format", c.format, "artifact format")->check(CLI::IsMember({"csv", "svg", "both"}));
}

std::map<std::string, double> parse_params(const std::vector<std::string>& raw)
{
    std::map<std::string, double> out;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw serieslab::InvalidArgument("--param expects name=value, got '" + item + "'");
        std::size_t used = 0;
        const std::string value = item.substr(eq + 1);
        double v = 0;
        try {
            v = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != value.size() || value.empty())
            throw serieslab::InvalidArgument("--param value is not a number in '" + item + "'");
        out[item.substr(0, eq)] = v;
    }
    return out;
}

void print_config_errors(const std::vector<lab::ConfigError>& errors)
{
    for (const auto& e : errors)
        std::cerr << "config error: " << e.to_string() << "\n";
}

int run_cmd(const std::string& path, const Common& c)
{
    auto loaded = lab::load_config_file(path);
    if (!loaded.ok()) {
        print_config_errors(loaded.errors);
        return exit_usage;
    }
    auto opts = c.options();
    if (opts.out_dir.empty())
        opts.out_dir = loaded.config->output.empty() ? std::filesystem::path("out") / loaded.config->name
                                                     : std::filesystem::path(loaded.config->output);
    const auto result = lab::run_scenario(*loaded.config, opts);
    std::cout << result.report.to_text();
    std::cout << "artifacts: " << opts.out_dir.string() << " (" << result.files.size() << " files)\n";
    return result.report.all_pass() ? exit_pass : exit_fail;
}

int figure_cmd(const std::string& id, const Common& c)
{
    const auto fig = lab::reproduce_figure(lab::parse_figure_id(id), c.out.empty() ? "out/figures" : c.out,
                                           lab::parse_output_format(c.format), c.order.value_or(5));
    std::cout << fig.id << ": " << fig.caption << "\n";
    for (const auto& [k, v] : fig.facts)
        std::cout << "  " << k << " = " << lab::format_number(v) << "\n";
    for (const auto& f : fig.files)
        std::cout << "  wrote " << f.string() << "\n";
    return exit_pass;
}

int report_all_cmd(const std::string& scenarios, const Common& c)
{
    auto opts = c.options();
    if (opts.out_dir.empty())
        opts.out_dir = "out";
    const auto presets = lab::load_presets(scenarios);
    if (presets.empty()) {
        std::cerr << "no *.yaml presets in " << scenarios << "\n";
        return exit_usage;
    }
    const auto all = lab::report_all(presets, opts);
    std::cout << all.combined.to_text();
    return all.combined.all_pass() ? exit_pass : exit_fail;
}

int radius_cmd(const std::string& model_name, const std::vector<std::string>& params,
               const std::vector<double>& state, std::size_t order, std::size_t window)
{
    const auto kind = serieslab::parse_model_kind(model_name);
    const auto model = serieslab::make_model(kind, parse_params(params), state);
    if (kind == serieslab::ModelKind::riccati) {
        const auto exact = serieslab::riccati_radius(state.at(0));
        std::cout << "radius (closed form): " << lab::format_number(exact.value()) << "  [" << exact.detail << "]\n";
    }
    const auto series = serieslab::generate_taylor_solution(model, order);
    const auto names = model.component_names();
    for (std::size_t c = 0; c < names.size(); ++c) {
        try {
            const auto r = serieslab::estimate_radius(series.components[c], window);
            std::cout << "radius estimate (" << names[c] << "): " << lab::format_number(r.value()) << "  ["
                      << r.detail << "]\n";
        } catch (const serieslab::NotEstimableError& e) {
            std::cout << "radius estimate (" << names[c] << "): not estimable (" << e.what() << ")\n";
        }
    }
    return exit_pass;
}

int endpoints_cmd(const std::vector<std::string>& params, const std::vector<double>& state)
{
    const auto model = serieslab::make_model(serieslab::ModelKind::sir, parse_params(params), state);
    const auto e = serieslab::sir_endpoints(model);
    auto show = [](const char* name, std::optional<double> v) {
        std::cout << name << " = " << (v ? lab::format_number(*v) : std::string("undefined (no epidemic)")) << "\n";
    };
    std::cout << "epidemic = " << (e.epidemic_occurs ? "yes" : "no") << "\n";
    show("x_limit", e.x_limit);
    show("x_over", e.x_over);
    show("x_peak", e.x_peak);
    show("y_peak", e.y_peak);
    return exit_pass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Time-power-series laboratory: series, radii of convergence, exact and reference solutions"};
    app.require_subcommand(1);

    Common common;
    std::string config_path, figure_id, scenario_dir = SERIESLAB_SCENARIO_DIR, model_name = "riccati";
    std::vector<std::string> params;
    std::vector<double> state;
    std::size_t radius_order = 30, window = 8;

    auto* run = app.add_subcommand("run", "run one scenario file");
    run->add_option("config", config_path, "scenario YAML")->required();
    add_common(run, common);

    auto* figure = app.add_subcommand("figure", "rebuild one figure (fig1..fig4)");
    figure->add_option("id", figure_id, "figure id")->required()->check(
        CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
    add_common(figure, common, false);

    auto* all = app.add_subcommand("report-all", "run every preset and print one combined table");
    all->add_option("--scenarios", scenario_dir, "directory of preset YAML files");
    add_common(all, common);

    auto* radius = app.add_subcommand("radius", "radius of convergence of the series about t=0");
    radius->add_option("--model", model_name, "riccati, lotka_volterra or sir")
        ->check(CLI::IsMember({"riccati", "lotka_volterra", "sir"}));
    radius->add_option("--param", params, "model parameter as name=value (repeatable)");
    radius->add_option("--state", state, "initial state, comma separated")->delimiter(',')->required();
    radius->add_option("--order", radius_order, "series order for the estimate")->check(CLI::Range(4, 200));
    radius->add_option("--window", window, "coefficient window for the estimate")->check(CLI::Range(4, 200));

    auto* endpoints = app.add_subcommand("endpoints", "SIR final size, return point and peak");
    endpoints->add_option("--param", params, "beta=... and gamma=...");
    endpoints->add_option("--state", state, "x0,y0,z0")->delimiter(',')->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*run)
            return run_cmd(config_path, common);
        if (*figure)
            return figure_cmd(figure_id, common);
        if (*all)
            return report_all_cmd(scenario_dir, common);
        if (*radius)
            return radius_cmd(model_name, params, state, radius_order, window);
        if (*endpoints)
            return endpoints_cmd(params, state);
    } catch (const lab::ConfigInvalid& e) {
        print_config_errors(e.errors());
        return exit_usage;
    } catch (const serieslab::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}
