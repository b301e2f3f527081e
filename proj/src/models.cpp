#include "serieslab/models.hpp"

#include <cmath>

#include "serieslab/errors.hpp"

namespace serieslab {

namespace {

void require_positive(double value, const char* name)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw InvalidArgument(std::string("parameter ") + name + " must be positive and finite");
}

void require_non_negative_state(const std::vector<double>& state)
{
    for (double v : state)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw InvalidArgument("initial state components must be finite and non-negative");
}

void validate(const LotkaVolterraParams& p)
{
    require_positive(p.a, "a");
    require_positive(p.b, "b");
    require_positive(p.c, "c");
    require_positive(p.d, "d");
}

void validate(const SirParams& p)
{
    require_positive(p.beta, "beta");
    require_positive(p.gamma, "gamma");
}

double lookup(const std::map<std::string, double>& params, const std::string& name)
{
    auto it = params.find(name);
    if (it == params.end())
        throw InvalidArgument("missing model parameter '" + name + "'");
    return it->second;
}

}  // namespace

std::string_view to_string(ModelKind kind)
{
    switch (kind) {
    case ModelKind::riccati: return "riccati";
    case ModelKind::lotka_volterra: return "lotka_volterra";
    case ModelKind::sir: return "sir";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view name)
{
    if (name == "riccati") return ModelKind::riccati;
    if (name == "lotka_volterra") return ModelKind::lotka_volterra;
    if (name == "sir") return ModelKind::sir;
    throw InvalidArgument("unknown model name '" + std::string(name) + "'");
}

double ModelInstance::param(const std::string& name) const
{
    return lookup(params, name);
}

std::vector<std::string> ModelInstance::component_names() const
{
    switch (kind) {
    case ModelKind::riccati: return {"Y"};
    case ModelKind::lotka_volterra: return {"x", "y"};
    case ModelKind::sir: return {"x", "y", "z"};
    }
    return {};
}

ModelInstance build_riccati(double y0)
{
    if (!std::isfinite(y0))
        throw InvalidArgument("build_riccati: initial value must be finite");
    PolynomialVectorField field(1, {{{1.0, {0}}, {2.0, {1}}, {-1.0, {2}}}});
    return ModelInstance{ModelKind::riccati, std::move(field), {}, {y0}, "riccati"};
}

PolynomialVectorField build_lotka_volterra(const LotkaVolterraParams& p)
{
    validate(p);
    return PolynomialVectorField(2, {
        {{p.a, {1, 0}}, {-p.b, {1, 1}}},
        {{-p.c, {0, 1}}, {p.d, {1, 1}}},
    });
}

PolynomialVectorField build_sir(const SirParams& p)
{
    validate(p);
    return PolynomialVectorField(3, {
        {{-p.beta, {1, 1, 0}}},
        {{p.beta, {1, 1, 0}}, {-p.gamma, {0, 1, 0}}},
        {{p.gamma, {0, 1, 0}}},
    });
}

ModelInstance make_lotka_volterra_model(const LotkaVolterraParams& p, double x0, double y0,
                                        std::string label)
{
    std::vector<double> state{x0, y0};
    auto field = build_lotka_volterra(p);
    require_non_negative_state(state);
    return ModelInstance{ModelKind::lotka_volterra, std::move(field),
                         {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}}, std::move(state),
                         std::move(label)};
}

ModelInstance make_sir_model(const SirParams& p, double x0, double y0, double z0,
                             std::string label)
{
    std::vector<double> state{x0, y0, z0};
    auto field = build_sir(p);
    require_non_negative_state(state);
    return ModelInstance{ModelKind::sir, std::move(field),
                         {{"beta", p.beta}, {"gamma", p.gamma}}, std::move(state),
                         std::move(label)};
}

ModelInstance make_model(ModelKind kind, const std::map<std::string, double>& params,
                         const std::vector<double>& initial_state, std::string label)
{
    auto expect_size = [&](std::size_t n) {
        if (initial_state.size() != n)
            throw InvalidArgument("model " + std::string(to_string(kind)) + " needs " +
                                  std::to_string(n) + " initial values, got " +
                                  std::to_string(initial_state.size()));
    };
    if (label.empty())
        label = std::string(to_string(kind));
    switch (kind) {
    case ModelKind::riccati: {
        expect_size(1);
        auto m = build_riccati(initial_state[0]);
        m.label = std::move(label);
        return m;
    }
    case ModelKind::lotka_volterra:
        expect_size(2);
        return make_lotka_volterra_model({lookup(params, "a"), lookup(params, "b"),
                                          lookup(params, "c"), lookup(params, "d")},
                                         initial_state[0], initial_state[1], std::move(label));
    case ModelKind::sir:
        expect_size(3);
        return make_sir_model({lookup(params, "beta"), lookup(params, "gamma")},
                              initial_state[0], initial_state[1], initial_state[2],
                              std::move(label));
    }
    throw InvalidArgument("make_model: unknown model kind");
}

LotkaVolterraParams lotka_volterra_params(const ModelInstance& m)
{
    if (m.kind != ModelKind::lotka_volterra)
        throw InvalidArgument("model is not lotka_volterra");
    return {m.param("a"), m.param("b"), m.param("c"), m.param("d")};
}

SirParams sir_params(const ModelInstance& m)
{
    if (m.kind != ModelKind::sir)
        throw InvalidArgument("model is not sir");
    return {m.param("beta"), m.param("gamma")};
}

LvFixedPoints lv_fixed_points(const LotkaVolterraParams& p)
{
    validate(p);
    return {{0.0, 0.0}, {p.c / p.d, p.a / p.b}};
}

}  // namespace serieslab
