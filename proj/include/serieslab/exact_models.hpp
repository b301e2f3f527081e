#pragma once

#include <optional>

#include "serieslab/models.hpp"

namespace serieslab {

// ---- Riccati -------------------------------------------------------------

/// Real time at which the closed-form Riccati solution from y0 has a pole,
/// if any (negative times included).
std::optional<double> riccati_real_pole(double y0);

/// Closed-form solution of dY/dt = 2Y - Y^2 + 1, Y(0) = y0. Throws
/// BlowUpError if a real pole lies between 0 and t, InvalidArgument for
/// non-finite input.
double riccati_exact(double y0, double t);

// ---- Prey-predator -------------------------------------------------------

/// c ln x + a ln y - d x - b y, constant along every orbit with x, y > 0.
/// Throws DomainError unless x > 0 and y > 0.
double lv_conserved(double x, double y, const LotkaVolterraParams& p);

// ---- Epidemic ------------------------------------------------------------

/// Infectives as a function of susceptibles along the orbit through the
/// model's initial state. Throws DomainError for x <= 0.
double sir_y_of_x(double x, const ModelInstance& model);
/// Removed as a function of susceptibles. Throws DomainError for x <= 0.
double sir_z_of_x(double x, const ModelInstance& model);

struct SirEndpoints {
    double x_limit;                ///< susceptibles left when infectives vanish
    std::optional<double> x_over;  ///< susceptibles when infectives return to y0
    std::optional<double> x_peak;  ///< gamma/beta, only when an epidemic occurs
    std::optional<double> y_peak;  ///< infectives at x_peak
    bool epidemic_occurs;          ///< x0 > gamma/beta
};

/// Throws InvalidArgument unless x0, y0 > 0; AnalysisError if a root cannot
/// be bracketed.
SirEndpoints sir_endpoints(const ModelInstance& model, double root_tol = 1e-12);

struct SirTimeOptions {
    double abs_tol = 1e-9;
    /// Relative distance above x_limit below which the time integral is
    /// considered too close to its logarithmic divergence.
    double singular_guard = 1e-3;
};

/// Time at which the susceptibles reach x, by quadrature of
/// (1/beta) * integral_x^{x0} dx' / (x' y(x')). The integral is taken in
/// u = ln x', where the integrand is smooth away from x_limit.
/// Throws NearSingularError when x <= x_limit (1 + guard), DomainError when
/// x > x0, AccuracyError when the quadrature does not converge.
double sir_t_of_x(double x, const ModelInstance& model, const SirTimeOptions& opts = {});

}  // namespace serieslab
