#include <filesystem>
#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "serieslab/convergence.hpp"
#include "serieslab/errors.hpp"
#include "serieslab/exact_models.hpp"
#include "serieslab/integrate.hpp"
#include "serieslab/lab/config.hpp"
#include "serieslab/lab/figures.hpp"
#include "serieslab/lab/scenario.hpp"
#include "serieslab/models.hpp"
#include "serieslab/truncated_series.hpp"

namespace py = pybind11;
using namespace serieslab;

namespace {

py::dict report_to_dict(const lab::ComparisonReport& report)
{
    py::list rows;
    for (const auto& r : report.rows) {
        py::dict row;
        row["quantity"] = r.quantity;
        row["computed"] = r.computed;
        row["reference"] = r.reference;
        row["rel_error"] = r.rel_error;
        row["pass"] = r.pass;
        row["criterion"] = r.criterion;
        row["locus"] = r.locus;
        row["note"] = r.note;
        rows.append(row);
    }
    py::dict out;
    out["scenario"] = report.scenario;
    out["meta"] = report.meta;
    out["rows"] = rows;
    out["all_pass"] = report.all_pass();
    out["text"] = report.to_text();
    return out;
}

std::vector<std::string> error_strings(const std::vector<lab::ConfigError>& errors)
{
    std::vector<std::string> out;
    for (const auto& e : errors)
        out.push_back(e.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Taylor-series ODE solver core";

    // Bases before derived types: the last registered translator is tried first.
    auto invalid = py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<lab::ConfigInvalid>(m, "ConfigInvalid", invalid.ptr());
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    auto numeric = py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);
    py::register_exception<NotEstimableError>(m, "NotEstimableError", numeric.ptr());
    py::register_exception<AccuracyError>(m, "AccuracyError", numeric.ptr());
    py::register_exception<BlowUpError>(m, "BlowUpError", numeric.ptr());
    py::register_exception<DivergenceError>(m, "DivergenceError", numeric.ptr());
    py::register_exception<IntegrationError>(m, "IntegrationError", numeric.ptr());

    py::class_<ModelInstance>(m, "ModelInstance")
        .def_property_readonly("kind", [](const ModelInstance& mi) { return std::string(to_string(mi.kind)); })
        .def_readonly("params", &ModelInstance::params)
        .def_readonly("initial_state", &ModelInstance::initial_state)
        .def_readonly("label", &ModelInstance::label)
        .def_property_readonly("dimension", &ModelInstance::dimension)
        .def_property_readonly("component_names", &ModelInstance::component_names)
        .def("__repr__", [](const ModelInstance& mi) {
            return "<ModelInstance " + std::string(to_string(mi.kind)) + ">";
        });

    m.def("riccati", &build_riccati, py::arg("y0"));
    m.def(
        "lotka_volterra",
        [](double a, double b, double c, double d, double x0, double y0) {
            return make_lotka_volterra_model({a, b, c, d}, x0, y0);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("x0"), py::arg("y0"));
    m.def(
        "sir",
        [](double beta, double gamma, double x0, double y0, double z0) {
            return make_sir_model({beta, gamma}, x0, y0, z0);
        },
        py::arg("beta"), py::arg("gamma"), py::arg("x0"), py::arg("y0"), py::arg("z0"));
    m.def(
        "make_model",
        [](const std::string& name, const std::map<std::string, double>& params,
           const std::vector<double>& state) { return make_model(parse_model_kind(name), params, state); },
        py::arg("name"), py::arg("params"), py::arg("initial_state"));

    m.def(
        "series_coefficients",
        [](const ModelInstance& model, std::size_t order) {
            std::vector<std::vector<double>> out;
            for (const auto& s : generate_taylor_solution(model, order).components)
                out.emplace_back(s.coefficients().begin(), s.coefficients().end());
            return out;
        },
        py::arg("model"), py::arg("order") = default_series_order,
        "Taylor coefficients about t = 0, one list per component.");
    m.def(
        "eval_series",
        [](const ModelInstance& model, std::size_t order, double t) {
            return generate_taylor_solution(model, order).eval(t);
        },
        py::arg("model"), py::arg("order"), py::arg("t"));

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("times", &Trajectory::times)
        .def_readonly("states", &Trajectory::states)
        .def_readonly("component_names", &Trajectory::component_names)
        .def_readonly("meta", &Trajectory::meta)
        .def_property_readonly("provenance", [](const Trajectory& t) { return std::string(to_string(t.provenance)); })
        .def("component", &Trajectory::component)
        .def("__len__", &Trajectory::size);

    m.def("multistage_taylor", &multistage_taylor, py::arg("model"), py::arg("order"), py::arg("step"),
          py::arg("t_end"));
    m.def(
        "reference_integrate",
        [](const ModelInstance& model, double t_end, double tol, std::vector<double> grid,
           std::optional<double> abs_tol) {
            ReferenceOptions opts;
            opts.grid = std::move(grid);
            opts.abs_tol = abs_tol;
            return reference_integrate(model, t_end, tol, opts);
        },
        py::arg("model"), py::arg("t_end"), py::arg("tol") = 1e-10, py::arg("grid") = std::vector<double>{},
        py::arg("abs_tol") = std::nullopt);

    py::class_<RadiusReport>(m, "RadiusReport")
        .def_readonly("radius", &RadiusReport::radius)
        .def_readonly("detail", &RadiusReport::detail)
        .def_property_readonly("method", [](const RadiusReport& r) { return std::string(to_string(r.method)); })
        .def_property_readonly("value", &RadiusReport::value)
        .def_property_readonly("is_infinite", &RadiusReport::is_infinite);

    m.def("riccati_radius", &riccati_radius, py::arg("y0"));
    m.def("riccati_multistage_radius", &riccati_multistage_radius, py::arg("t"));
    m.def(
        "estimate_radius",
        [](const std::vector<double>& coefficients, std::size_t window) {
            return estimate_radius(TruncatedSeries(coefficients), window);
        },
        py::arg("coefficients"), py::arg("window") = 8);

    m.def("riccati_exact", &riccati_exact, py::arg("y0"), py::arg("t"));
    m.def(
        "lv_conserved",
        [](double x, double y, double a, double b, double c, double d) {
            return lv_conserved(x, y, {a, b, c, d});
        },
        py::arg("x"), py::arg("y"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));

    py::class_<SirEndpoints>(m, "SirEndpoints")
        .def_readonly("x_limit", &SirEndpoints::x_limit)
        .def_readonly("x_over", &SirEndpoints::x_over)
        .def_readonly("x_peak", &SirEndpoints::x_peak)
        .def_readonly("y_peak", &SirEndpoints::y_peak)
        .def_readonly("epidemic_occurs", &SirEndpoints::epidemic_occurs);
    m.def("sir_endpoints", &sir_endpoints, py::arg("model"), py::arg("root_tol") = 1e-12);

    m.def(
        "validate_config", [](const std::string& yaml) { return error_strings(lab::validate_config(yaml).errors); },
        py::arg("yaml"), "Validation errors as 'path: message' strings; empty when valid.");
    m.def(
        "run_scenario",
        [](const std::filesystem::path& config, std::optional<std::filesystem::path> out_dir,
           const std::string& format) {
            auto loaded = lab::load_config_file(config);
            if (!loaded.ok())
                throw lab::ConfigInvalid(loaded.errors);
            lab::RunOptions opts;
            if (out_dir)
                opts.out_dir = *out_dir;
            opts.format = lab::parse_output_format(format);
            const auto result = lab::run_scenario(*loaded.config, opts);
            auto out = report_to_dict(result.report);
            out["quantities"] = result.quantities;
            out["files"] = result.files;
            return out;
        },
        py::arg("config"), py::arg("out_dir") = std::nullopt, py::arg("format") = "both",
        "Run a YAML scenario. Without out_dir nothing is written to disk.");
    m.def(
        "reproduce_figure",
        [](const std::string& id, std::optional<std::filesystem::path> out_dir, std::size_t order) {
            const auto fig = lab::reproduce_figure(lab::parse_figure_id(id), out_dir.value_or(std::filesystem::path{}),
                                                   lab::OutputFormat::both, order);
            py::dict out;
            out["id"] = fig.id;
            out["caption"] = fig.caption;
            out["facts"] = fig.facts;
            out["files"] = fig.files;
            out["svg"] = fig.svg;
            return out;
        },
        py::arg("id"), py::arg("out_dir") = std::nullopt, py::arg("order") = 5);
}
