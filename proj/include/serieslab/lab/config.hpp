#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "serieslab/errors.hpp"
#include "serieslab/models.hpp"

namespace serieslab::lab {

enum class Analysis { radius, endpoints, conserved, phase_plane };

std::string_view to_string(Analysis a);

enum class CheckMode {
    abs,    ///< |computed - expect| <= tol
    rel,    ///< |computed - expect| <= tol * |expect|
    lt,     ///< computed < expect
    gt,     ///< computed > expect
    exact,  ///< computed == expect
};

std::string_view to_string(CheckMode m);

/// One expected value for a computed quantity, with the context it comes from.
struct Check {
    std::string quantity;
    double expect = 0.0;
    double tol = 0.0;
    CheckMode mode = CheckMode::abs;
    std::string locus;
};

struct MultistageSpec {
    std::size_t order = 5;
    double step = 0.2;
};

struct ScenarioConfig {
    std::string name;
    std::string description;
    ModelKind model = ModelKind::riccati;
    std::map<std::string, double> params;
    std::vector<double> initial_state;
    std::size_t series_order = 5;
    std::optional<MultistageSpec> multistage;
    double t_end = 1.0;
    std::size_t samples = 201;
    double reference_tol = 1e-10;
    std::optional<double> reference_abs_tol;
    std::vector<Analysis> analyses;
    std::vector<Check> checks;
    std::string output;

    bool has(Analysis a) const;
    ModelInstance model_instance() const;
};

struct ConfigError {
    std::string path;
    std::string message;

    std::string to_string() const { return path + ": " + message; }
};

struct ValidationResult {
    std::optional<ScenarioConfig> config;
    std::vector<ConfigError> errors;

    bool ok() const noexcept { return errors.empty(); }
};

/// Parses and validates a YAML scenario. Every problem is collected, each
/// tagged with the field path it concerns; nothing is thrown for bad input.
ValidationResult validate_config(std::string_view text);

ValidationResult load_config_file(const std::filesystem::path& path);

/// Semantic checks on an already-built config (used again after command
/// line overrides are applied).
std::vector<ConfigError> validate(const ScenarioConfig& config);

/// Names of the quantities a run of this config produces; checks may only
/// refer to these.
std::vector<std::string> available_quantities(const ScenarioConfig& config);

/// Thrown by run_scenario when handed a config that does not validate.
class ConfigInvalid : public InvalidArgument {
public:
    explicit ConfigInvalid(std::vector<ConfigError> errors);
    const std::vector<ConfigError>& errors() const noexcept { return errors_; }

private:
    std::vector<ConfigError> errors_;
};

}  // namespace serieslab::lab
