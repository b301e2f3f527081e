#pragma once

#include <array>
#include <map>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "serieslab/polynomial_field.hpp"

namespace serieslab {

enum class ModelKind { riccati, lotka_volterra, sir };

std::string_view to_string(ModelKind kind);
/// Throws InvalidArgument for anything other than riccati, lotka_volterra, sir.
ModelKind parse_model_kind(std::string_view name);

/// Prey-predator rates: dx/dt = x(a - b y), dy/dt = -y(c - d x).
struct LotkaVolterraParams {
    double a, b, c, d;
};

/// Epidemic rates: dx/dt = -beta x y, dy/dt = beta x y - gamma y, dz/dt = gamma y.
struct SirParams {
    double beta, gamma;

    double threshold() const noexcept { return gamma / beta; }
};

/// A vector field together with its parameters and initial state: the unit a
/// scenario runs on.
struct ModelInstance {
    ModelKind kind;
    PolynomialVectorField field;
    std::map<std::string, double> params;
    std::vector<double> initial_state;
    std::string label;

    std::size_t dimension() const noexcept { return field.dimension(); }
    double param(const std::string& name) const;
    std::vector<std::string> component_names() const;
};

/// dY/dt = 2Y - Y^2 + 1 with Y(0) = y0.
ModelInstance build_riccati(double y0);

PolynomialVectorField build_lotka_volterra(const LotkaVolterraParams& p);
PolynomialVectorField build_sir(const SirParams& p);

ModelInstance make_lotka_volterra_model(const LotkaVolterraParams& p, double x0, double y0,
                                        std::string label = "lotka_volterra");
ModelInstance make_sir_model(const SirParams& p, double x0, double y0, double z0,
                             std::string label = "sir");

/// Generic constructor used by the scenario loader. Parameter names are
/// a,b,c,d for lotka_volterra and beta,gamma for sir; riccati takes none.
ModelInstance make_model(ModelKind kind, const std::map<std::string, double>& params,
                         const std::vector<double>& initial_state, std::string label = {});

LotkaVolterraParams lotka_volterra_params(const ModelInstance& m);
SirParams sir_params(const ModelInstance& m);

struct LvFixedPoints {
    std::array<double, 2> saddle;
    std::array<double, 2> center;
};

LvFixedPoints lv_fixed_points(const LotkaVolterraParams& p);

/// Stationary points of the Riccati field: 1 + sqrt(2) (attracting) and
/// 1 - sqrt(2) (repelling).
inline constexpr double riccati_stable_point = 1.0 + std::numbers::sqrt2;
inline constexpr double riccati_unstable_point = 1.0 - std::numbers::sqrt2;

}  // namespace serieslab
