#include "serieslab/lab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace serieslab::lab {

std::string_view to_string(Analysis a)
{
    switch (a) {
    case Analysis::radius: return "radius";
    case Analysis::endpoints: return "endpoints";
    case Analysis::conserved: return "conserved";
    case Analysis::phase_plane: return "phase_plane";
    }
    return "?";
}

std::string_view to_string(CheckMode m)
{
    switch (m) {
    case CheckMode::abs: return "abs";
    case CheckMode::rel: return "rel";
    case CheckMode::lt: return "lt";
    case CheckMode::gt: return "gt";
    case CheckMode::exact: return "exact";
    }
    return "?";
}

bool ScenarioConfig::has(Analysis a) const
{
    return std::find(analyses.begin(), analyses.end(), a) != analyses.end();
}

ModelInstance ScenarioConfig::model_instance() const
{
    return make_model(model, params, initial_state, name);
}

ConfigInvalid::ConfigInvalid(std::vector<ConfigError> errors)
    : InvalidArgument([&] {
          std::string msg = "invalid scenario config";
          for (const auto& e : errors)
              msg += "\n  " + e.to_string();
          return msg;
      }()),
      errors_(std::move(errors))
{
}

namespace {

const std::map<ModelKind, std::vector<std::string>> required_params{
    {ModelKind::riccati, {}},
    {ModelKind::lotka_volterra, {"a", "b", "c", "d"}},
    {ModelKind::sir, {"beta", "gamma"}},
};

std::size_t state_size(ModelKind k)
{
    switch (k) {
    case ModelKind::riccati: return 1;
    case ModelKind::lotka_volterra: return 2;
    case ModelKind::sir: return 3;
    }
    return 0;
}

class Reader {
public:
    std::vector<ConfigError> errors;

    void fail(std::string path, std::string message) { errors.push_back({std::move(path), std::move(message)}); }

    template <class T>
    std::optional<T> get(const YAML::Node& node, const std::string& path)
    {
        try {
            return node.as<T>();
        } catch (const YAML::Exception&) {
            fail(path, "expected " + type_name<T>());
            return std::nullopt;
        }
    }

    void check_keys(const YAML::Node& map, const std::string& prefix, const std::set<std::string>& allowed)
    {
        for (const auto& kv : map) {
            const auto key = kv.first.as<std::string>();
            if (!allowed.count(key))
                fail(prefix + key, "unknown key");
        }
    }

private:
    template <class T>
    static std::string type_name()
    {
        if constexpr (std::is_same_v<T, double>)
            return "a number";
        else if constexpr (std::is_same_v<T, std::string>)
            return "a string";
        else
            return "a non-negative integer";
    }
};

std::optional<CheckMode> parse_mode(const std::string& s)
{
    for (auto m : {CheckMode::abs, CheckMode::rel, CheckMode::lt, CheckMode::gt, CheckMode::exact})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

std::optional<Analysis> parse_analysis(const std::string& s)
{
    for (auto a : {Analysis::radius, Analysis::endpoints, Analysis::conserved, Analysis::phase_plane})
        if (to_string(a) == s)
            return a;
    return std::nullopt;
}

}  // namespace

std::vector<std::string> available_quantities(const ScenarioConfig& c)
{
    std::vector<std::string> names;
    const auto components = std::vector<std::string>(
        c.model == ModelKind::riccati ? std::vector<std::string>{"Y"}
        : c.model == ModelKind::lotka_volterra ? std::vector<std::string>{"x", "y"}
                                               : std::vector<std::string>{"x", "y", "z"});
    names.push_back("series_end_error");
    for (const auto& comp : components)
        names.push_back("end_value." + comp);
    if (c.model == ModelKind::sir) {
        names.push_back("population_drift_reference");
        names.push_back("population_drift_series");
    }
    if (c.multistage) {
        names.push_back("multistage_end_error");
        for (const auto& comp : components)
            names.push_back("multistage_end_value." + comp);
    }
    if (c.has(Analysis::radius)) {
        names.push_back("radius");
        if (c.model == ModelKind::riccati) {
            names.push_back("radius_estimate");
            names.push_back("local_radius_min");
        }
    }
    if (c.has(Analysis::endpoints))
        for (const char* q : {"x_limit", "x_over", "x_peak", "y_peak", "threshold"})
            names.push_back(q);
    if (c.has(Analysis::conserved))
        for (const char* q : {"conserved_drift_reference", "conserved_violation_series", "series_min_x",
                              "reference_min_x"})
            names.push_back(q);
    if (c.has(Analysis::phase_plane)) {
        names.push_back("series_crossings");
        names.push_back("reference_crossings");
    }
    return names;
}

namespace {

template <class Fail>
void check_model(const ScenarioConfig& c, Fail&& fail)
{
    for (const auto& p : required_params.at(c.model)) {
        const auto it = c.params.find(p);
        if (it == c.params.end())
            fail("model.params." + p, "missing");
        else if (!(std::isfinite(it->second) && it->second > 0))
            fail("model.params." + p, "must be positive");
    }
    for (const auto& [key, value] : c.params) {
        const auto& req = required_params.at(c.model);
        if (std::find(req.begin(), req.end(), key) == req.end())
            fail("model.params." + key, "not a parameter of " + std::string(serieslab::to_string(c.model)));
    }
    if (c.initial_state.size() != state_size(c.model))
        fail("model.initial_state", "expected " + std::to_string(state_size(c.model)) + " values");
    for (std::size_t i = 0; i < c.initial_state.size(); ++i) {
        const double v = c.initial_state[i];
        if (!std::isfinite(v))
            fail("model.initial_state[" + std::to_string(i) + "]", "must be finite");
        else if (c.model != ModelKind::riccati && v < 0)
            fail("model.initial_state[" + std::to_string(i) + "]", "must be non-negative");
    }
}

std::vector<ConfigError> validate_impl(const ScenarioConfig& c, bool model_known)
{
    std::vector<ConfigError> errs;
    auto fail = [&](std::string p, std::string m) { errs.push_back({std::move(p), std::move(m)}); };

    if (c.name.empty())
        fail("name", "must not be empty");
    else if (c.name.find_first_of("/\\") != std::string::npos || c.name == "." || c.name == "..")
        fail("name", "must be usable as a directory name");

    if (model_known)
        check_model(c, fail);

    if (c.series_order < 1)
        fail("series.order", "must be at least 1");
    if (c.multistage) {
        if (c.multistage->order < 2)
            fail("multistage.order", "must be at least 2");
        if (!(std::isfinite(c.multistage->step) && c.multistage->step > 0))
            fail("multistage.step", "must be positive");
    }
    if (!(std::isfinite(c.t_end) && c.t_end > 0))
        fail("grid.t_end", "must be positive");
    if (c.samples < 2)
        fail("grid.samples", "must be at least 2");
    if (!(c.reference_tol >= 1e-13 && c.reference_tol <= 1e-3))
        fail("reference.tol", "must lie in [1e-13, 1e-3]");
    if (c.reference_abs_tol && !(*c.reference_abs_tol > 0))
        fail("reference.abs_tol", "must be positive");

    for (auto a : c.analyses) {
        if (!model_known)
            break;
        if (a == Analysis::endpoints && c.model != ModelKind::sir)
            fail("analysis", "endpoints requires sir");
        if ((a == Analysis::conserved || a == Analysis::phase_plane) && c.model != ModelKind::lotka_volterra)
            fail("analysis", std::string(to_string(a)) + " requires lotka_volterra");
    }

    const auto available = available_quantities(c);
    for (std::size_t i = 0; i < c.checks.size(); ++i) {
        const auto& ch = c.checks[i];
        const std::string path = "checks[" + std::to_string(i) + "]";
        if (model_known && std::find(available.begin(), available.end(), ch.quantity) == available.end())
            fail(path + ".quantity", "'" + ch.quantity + "' is not produced by this scenario");
        if ((ch.mode == CheckMode::abs || ch.mode == CheckMode::rel) && !(ch.tol >= 0))
            fail(path + ".tol", "must be non-negative");
        if (ch.locus.empty())
            fail(path + ".locus", "must not be empty");
    }
    return errs;
}

}  // namespace

std::vector<ConfigError> validate(const ScenarioConfig& c)
{
    return validate_impl(c, true);
}

ValidationResult validate_config(std::string_view text)
{
    ValidationResult result;
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        result.errors.push_back({"(document)", std::string("not valid YAML: ") + e.what()});
        return result;
    }
    if (!root.IsMap()) {
        result.errors.push_back({"(document)", "expected a mapping at the top level"});
        return result;
    }

    Reader r;
    ScenarioConfig c;
    r.check_keys(root, "", {"name", "description", "model", "series", "multistage", "grid", "reference",
                            "analyses", "checks", "output"});

    if (auto v = root["name"]; !v)
        r.fail("name", "missing");
    else if (auto s = r.get<std::string>(v, "name"))
        c.name = *s;
    if (auto v = root["description"])
        if (auto s = r.get<std::string>(v, "description"))
            c.description = *s;
    if (auto v = root["output"])
        if (auto s = r.get<std::string>(v, "output"))
            c.output = *s;

    bool model_known = false;
    if (auto m = root["model"]; !m || !m.IsMap()) {
        r.fail("model", "missing or not a mapping");
    } else {
        r.check_keys(m, "model.", {"name", "params", "initial_state"});
        if (!m["name"])
            r.fail("model.name", "missing");
        else if (auto n = r.get<std::string>(m["name"], "model.name")) {
            try {
                c.model = parse_model_kind(*n);
                model_known = true;
            } catch (const InvalidArgument&) {
                r.fail("model", "unknown name");
            }
        }
        if (auto p = m["params"]) {
            if (!p.IsMap())
                r.fail("model.params", "expected a mapping");
            else
                for (const auto& kv : p) {
                    const auto key = kv.first.as<std::string>();
                    if (auto d = r.get<double>(kv.second, "model.params." + key))
                        c.params[key] = *d;
                }
        }
        if (auto s = m["initial_state"]; !s || !s.IsSequence()) {
            r.fail("model.initial_state", "missing or not a list");
        } else {
            for (std::size_t i = 0; i < s.size(); ++i)
                if (auto d = r.get<double>(s[i], "model.initial_state[" + std::to_string(i) + "]"))
                    c.initial_state.push_back(*d);
        }
    }

    if (auto s = root["series"]) {
        r.check_keys(s, "series.", {"order"});
        if (s["order"])
            if (auto n = r.get<long long>(s["order"], "series.order"))
                c.series_order = *n < 0 ? 0 : static_cast<std::size_t>(*n);
    }
    if (auto ms = root["multistage"]) {
        r.check_keys(ms, "multistage.", {"order", "step"});
        MultistageSpec spec;
        if (ms["order"])
            if (auto n = r.get<long long>(ms["order"], "multistage.order"))
                spec.order = *n < 0 ? 0 : static_cast<std::size_t>(*n);
        if (ms["step"])
            if (auto d = r.get<double>(ms["step"], "multistage.step"))
                spec.step = *d;
        c.multistage = spec;
    }
    if (auto g = root["grid"]; !g || !g.IsMap()) {
        r.fail("grid", "missing or not a mapping");
    } else {
        r.check_keys(g, "grid.", {"t_end", "samples"});
        if (!g["t_end"])
            r.fail("grid.t_end", "missing");
        else if (auto d = r.get<double>(g["t_end"], "grid.t_end"))
            c.t_end = *d;
        if (g["samples"])
            if (auto n = r.get<long long>(g["samples"], "grid.samples"))
                c.samples = *n < 0 ? 0 : static_cast<std::size_t>(*n);
    }
    if (auto ref = root["reference"]) {
        r.check_keys(ref, "reference.", {"tol", "abs_tol"});
        if (ref["tol"])
            if (auto d = r.get<double>(ref["tol"], "reference.tol"))
                c.reference_tol = *d;
        if (ref["abs_tol"])
            if (auto d = r.get<double>(ref["abs_tol"], "reference.abs_tol"))
                c.reference_abs_tol = *d;
    }
    if (auto an = root["analyses"]) {
        if (!an.IsSequence()) {
            r.fail("analyses", "expected a list");
        } else {
            for (std::size_t i = 0; i < an.size(); ++i) {
                const auto path = "analyses[" + std::to_string(i) + "]";
                if (auto s = r.get<std::string>(an[i], path)) {
                    if (auto a = parse_analysis(*s)) {
                        if (!c.has(*a))
                            c.analyses.push_back(*a);
                    } else {
                        r.fail(path, "unknown analysis '" + *s + "'");
                    }
                }
            }
        }
    }
    if (auto ch = root["checks"]) {
        if (!ch.IsSequence()) {
            r.fail("checks", "expected a list");
        } else {
            for (std::size_t i = 0; i < ch.size(); ++i) {
                const auto path = "checks[" + std::to_string(i) + "]";
                const auto node = ch[i];
                if (!node.IsMap()) {
                    r.fail(path, "expected a mapping");
                    continue;
                }
                r.check_keys(node, path + ".", {"quantity", "expect", "tol", "mode", "locus"});
                Check check;
                if (auto s = r.get<std::string>(node["quantity"], path + ".quantity"))
                    check.quantity = *s;
                if (auto d = r.get<double>(node["expect"], path + ".expect"))
                    check.expect = *d;
                if (node["tol"])
                    if (auto d = r.get<double>(node["tol"], path + ".tol"))
                        check.tol = *d;
                if (node["mode"])
                    if (auto s = r.get<std::string>(node["mode"], path + ".mode")) {
                        if (auto m = parse_mode(*s))
                            check.mode = *m;
                        else
                            r.fail(path + ".mode", "must be one of abs, rel, lt, gt, exact");
                    }
                if (node["locus"])
                    if (auto s = r.get<std::string>(node["locus"], path + ".locus"))
                        check.locus = *s;
                c.checks.push_back(std::move(check));
            }
        }
    }

    result.errors = std::move(r.errors);
    // A field that failed to read already has its error; its default value
    // would only add noise.
    std::set<std::string> unreadable;
    for (const auto& e : result.errors)
        unreadable.insert(e.path);
    for (auto& e : validate_impl(c, model_known))
        if (!unreadable.count(e.path))
            result.errors.push_back(std::move(e));
    if (result.errors.empty())
        result.config = std::move(c);
    return result;
}

ValidationResult load_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        ValidationResult r;
        r.errors.push_back({path.string(), "cannot open file"});
        return r;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return validate_config(ss.str());
}

}  // namespace serieslab::lab
