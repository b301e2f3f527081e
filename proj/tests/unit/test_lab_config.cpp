#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "serieslab/lab/config.hpp"

using namespace serieslab;
using namespace serieslab::lab;

namespace {

const char* const valid_sir = R"(
name: demo
model:
  name: sir
  params: {beta: 0.01, gamma: 0.02}
  initial_state: [20, 15, 10]
series: {order: 5}
grid: {t_end: 10, samples: 11}
analyses: [endpoints]
checks:
  - {quantity: x_peak, expect: 2, mode: exact, locus: "peak"}
)";

bool has_error(const ValidationResult& r, const std::string& text)
{
    return std::any_of(r.errors.begin(), r.errors.end(),
                       [&](const ConfigError& e) { return e.to_string() == text; });
}

std::string dump(const ValidationResult& r)
{
    std::string s;
    for (const auto& e : r.errors)
        s += e.to_string() + "\n";
    return s;
}

}  // namespace

TEST(ScenarioConfig, ValidDocument)
{
    const auto r = validate_config(valid_sir);
    ASSERT_TRUE(r.ok()) << dump(r);
    const auto& c = *r.config;
    EXPECT_EQ(c.name, "demo");
    EXPECT_EQ(c.model, ModelKind::sir);
    EXPECT_EQ(c.params.at("gamma"), 0.02);
    EXPECT_EQ(c.initial_state, (std::vector<double>{20, 15, 10}));
    EXPECT_EQ(c.samples, 11u);
    EXPECT_FALSE(c.multistage);
    EXPECT_TRUE(c.has(Analysis::endpoints));
    ASSERT_EQ(c.checks.size(), 1u);
    EXPECT_EQ(c.checks[0].mode, CheckMode::exact);
    EXPECT_EQ(c.model_instance().dimension(), 3u);
}

TEST(ScenarioConfig, UnknownModelName)
{
    const auto r = validate_config(R"(
name: x
model: {name: seir, initial_state: [1]}
grid: {t_end: 1}
)");
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.config);
    EXPECT_TRUE(has_error(r, "model: unknown name")) << dump(r);
}

TEST(ScenarioConfig, AnalysisMustFitModel)
{
    const auto r = validate_config(R"(
name: x
model: {name: sir, params: {beta: 1, gamma: 1}, initial_state: [1, 1, 0]}
grid: {t_end: 1}
analyses: [conserved, phase_plane]
)");
    EXPECT_TRUE(has_error(r, "analysis: conserved requires lotka_volterra")) << dump(r);
    EXPECT_TRUE(has_error(r, "analysis: phase_plane requires lotka_volterra")) << dump(r);

    const auto r2 = validate_config(R"(
name: x
model: {name: riccati, initial_state: [0]}
grid: {t_end: 1}
analyses: [endpoints]
)");
    EXPECT_TRUE(has_error(r2, "analysis: endpoints requires sir")) << dump(r2);
}

TEST(ScenarioConfig, NegativeMultistageStep)
{
    const auto r = validate_config(R"(
name: x
model: {name: riccati, initial_state: [0]}
multistage: {order: 5, step: -0.2}
grid: {t_end: 1}
)");
    EXPECT_TRUE(has_error(r, "multistage.step: must be positive")) << dump(r);
}

TEST(ScenarioConfig, AllViolationsReportedTogether)
{
    const auto r = validate_config(R"(
name: x
model: {name: lotka_volterra, params: {a: 1, b: -1, c: 1}, initial_state: [1, 2, 3]}
multistage: {order: 1, step: 0}
grid: {t_end: -1, samples: 1}
reference: {tol: 1}
analyses: [endpoints, bogus]
checks:
  - {quantity: x_limit, expect: 1, tol: -1, mode: rel}
  - {quantity: radius, expect: 1, mode: sideways, locus: here}
extra: 1
)");
    for (const char* expected :
         {"model.params.b: must be positive", "model.params.d: missing", "model.initial_state: expected 2 values",
          "multistage.order: must be at least 2", "multistage.step: must be positive",
          "grid.t_end: must be positive", "grid.samples: must be at least 2",
          "reference.tol: must lie in [1e-13, 1e-3]", "analysis: endpoints requires sir",
          "analyses[1]: unknown analysis 'bogus'", "checks[0].tol: must be non-negative",
          "checks[0].locus: must not be empty", "checks[1].mode: must be one of abs, rel, lt, gt, exact",
          "extra: unknown key"})
        EXPECT_TRUE(has_error(r, expected)) << expected << "\n" << dump(r);
}

TEST(ScenarioConfig, ChecksMustNameProducedQuantities)
{
    const auto r = validate_config(R"(
name: x
model: {name: riccati, initial_state: [0]}
grid: {t_end: 1}
checks:
  - {quantity: radius, expect: 1.274, tol: 0.001, mode: abs, locus: "radius"}
  - {quantity: multistage_end_error, expect: 1.0e-6, mode: lt, locus: "ms"}
)");
    EXPECT_TRUE(has_error(r, "checks[0].quantity: 'radius' is not produced by this scenario")) << dump(r);
    EXPECT_TRUE(has_error(r, "checks[1].quantity: 'multistage_end_error' is not produced by this scenario"))
        << dump(r);
}

TEST(ScenarioConfig, MalformedDocuments)
{
    const auto bad = validate_config("name: [unclosed");
    ASSERT_EQ(bad.errors.size(), 1u);
    EXPECT_EQ(bad.errors[0].path, "(document)");
    EXPECT_FALSE(validate_config("- a\n- b\n").ok());
    const auto r = validate_config("name: x\nmodel: {name: riccati, initial_state: [zero]}\ngrid: {t_end: 1}\n");
    EXPECT_TRUE(has_error(r, "model.initial_state[0]: expected a number")) << dump(r);
    const auto missing = validate_config("name: x\n");
    EXPECT_TRUE(has_error(missing, "model: missing or not a mapping")) << dump(missing);
    EXPECT_TRUE(has_error(missing, "grid: missing or not a mapping")) << dump(missing);
}

TEST(ScenarioConfig, AvailableQuantitiesFollowAnalyses)
{
    auto c = *validate_config(valid_sir).config;
    auto q = available_quantities(c);
    EXPECT_NE(std::find(q.begin(), q.end(), "x_over"), q.end());
    EXPECT_NE(std::find(q.begin(), q.end(), "end_value.z"), q.end());
    EXPECT_EQ(std::find(q.begin(), q.end(), "radius"), q.end());
    c.analyses.push_back(Analysis::radius);
    q = available_quantities(c);
    EXPECT_NE(std::find(q.begin(), q.end(), "radius"), q.end());
    EXPECT_EQ(std::find(q.begin(), q.end(), "local_radius_min"), q.end());
}

TEST(ScenarioConfig, MissingFile)
{
    const auto r = load_config_file("/nonexistent/scenario.yaml");
    ASSERT_EQ(r.errors.size(), 1u);
    EXPECT_EQ(r.errors[0].message, "cannot open file");
}
