#include "serieslab/exact_models.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "serieslab/errors.hpp"
#include "serieslab/numerics.hpp"

namespace serieslab {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;
constexpr double s_plus = sqrt2 + 1.0;
constexpr double s_minus = sqrt2 - 1.0;

struct SirData {
    double beta, gamma, x0, y0, z0;
    double ratio() const { return gamma / beta; }
};

SirData sir_data(const ModelInstance& model)
{
    const auto p = sir_params(model);
    const auto& s = model.initial_state;
    return {p.beta, p.gamma, s[0], s[1], s[2]};
}

}  // namespace

std::optional<double> riccati_real_pole(double y0)
{
    const double den = y0 + s_minus;
    if (den == 0.0)
        return std::nullopt;
    const double w = (y0 - s_plus) / den;
    if (!(w > 0.0) || w == 1.0)
        return std::nullopt;
    return std::log(w) / (2.0 * sqrt2);
}

double riccati_exact(double y0, double t)
{
    if (!std::isfinite(y0) || !std::isfinite(t))
        throw InvalidArgument("riccati_exact: arguments must be finite");
    if (auto pole = riccati_real_pole(y0)) {
        const bool crossed = t >= 0.0 ? (*pole > 0.0 && *pole <= t) : (*pole < 0.0 && *pole >= t);
        if (crossed)
            throw BlowUpError("riccati_exact: solution from y0=" + std::to_string(y0) +
                                  " has a pole at t=" + std::to_string(*pole),
                              *pole);
    }
    const double a = y0 + s_minus;
    const double b = y0 * s_minus - 1.0;
    if (t >= 0.0) {
        const double e = std::exp(-2.0 * sqrt2 * t);
        return (s_plus * a + b * e) / (a + (s_plus - y0) * e);
    }
    const double e = std::exp(2.0 * sqrt2 * t);
    return (s_plus * a * e + b) / (a * e - y0 + s_plus);
}

double lv_conserved(double x, double y, const LotkaVolterraParams& p)
{
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("lv_conserved: populations must be positive (x=" + std::to_string(x) +
                          ", y=" + std::to_string(y) + ")");
    return p.c * std::log(x) + p.a * std::log(y) - p.d * x - p.b * y;
}

double sir_y_of_x(double x, const ModelInstance& model)
{
    if (!(x > 0.0))
        throw DomainError("sir_y_of_x: susceptibles must be positive");
    const auto s = sir_data(model);
    return s.y0 + s.x0 - x + s.ratio() * std::log(x / s.x0);
}

double sir_z_of_x(double x, const ModelInstance& model)
{
    if (!(x > 0.0))
        throw DomainError("sir_z_of_x: susceptibles must be positive");
    const auto s = sir_data(model);
    return s.z0 - s.ratio() * std::log(x / s.x0);
}

SirEndpoints sir_endpoints(const ModelInstance& model, double root_tol)
{
    const auto s = sir_data(model);
    if (!(s.x0 > 0.0) || !(s.y0 > 0.0))
        throw InvalidArgument("sir_endpoints: x0 and y0 must be positive");
    const double k = s.ratio();
    const double lx0 = std::log(s.x0);

    // Roots are located in u = ln x so the bracket tolerance is relative in x.
    auto y_of_u = [&](double u) { return s.y0 + s.x0 - std::exp(u) + k * (u - lx0); };
    SirEndpoints out{};
    out.epidemic_occurs = s.x0 > k;

    // y(u) < y0 + x0 + k (u - lx0), which is negative below this bound.
    const double u_floor = lx0 - (s.y0 + s.x0) / k - 1.0;
    const double u_top = std::log(std::min(s.x0, k));
    try {
        out.x_limit = std::exp(find_root_bracketed(y_of_u, u_floor, u_top, root_tol));
    } catch (const BracketError& e) {
        throw AnalysisError(std::string("sir_endpoints: x_limit not bracketed: ") + e.what());
    }

    if (out.epidemic_occurs) {
        out.x_peak = k;
        out.y_peak = sir_y_of_x(k, model);
        auto over_of_u = [&](double u) { return s.x0 - std::exp(u) + k * (u - lx0); };
        const double delta = 1e-6 * s.x0;
        try {
            out.x_over = std::exp(find_root_bracketed(over_of_u, std::log(out.x_limit),
                                                      std::log(s.x0 - delta), root_tol));
        } catch (const BracketError& e) {
            throw AnalysisError(std::string("sir_endpoints: x_over not bracketed: ") + e.what());
        }
    }
    return out;
}

double sir_t_of_x(double x, const ModelInstance& model, const SirTimeOptions& opts)
{
    const auto s = sir_data(model);
    if (!(x > 0.0) || x > s.x0)
        throw DomainError("sir_t_of_x: need 0 < x <= x0");
    if (x == s.x0)
        return 0.0;
    const auto ends = sir_endpoints(model);
    if (x <= ends.x_limit * (1.0 + opts.singular_guard))
        throw NearSingularError("sir_t_of_x: x=" + std::to_string(x) +
                                " is within the singular guard of x_limit=" +
                                std::to_string(ends.x_limit));
    const double k = s.ratio();
    const double lx0 = std::log(s.x0);
    auto integrand = [&](double u) { return 1.0 / (s.y0 + s.x0 - std::exp(u) + k * (u - lx0)); };
    // Scale the target so the returned time meets abs_tol after dividing by beta.
    const auto q = integrate_adaptive(integrand, std::log(x), lx0, opts.abs_tol * s.beta);
    return q.value / s.beta;
}

}  // namespace serieslab
