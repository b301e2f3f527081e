#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "serieslab/truncated_series.hpp"

namespace serieslab {

enum class RadiusMethod { exact_riccati, exact_multistage, ratio_estimate };

std::string_view to_string(RadiusMethod method);

/// Radius of convergence of a time-power series. An empty `radius` means
/// the series is entire (the solution is constant, no singularity).
struct RadiusReport {
    std::optional<double> radius;
    RadiusMethod method;
    std::string detail;

    bool is_infinite() const noexcept { return !radius.has_value(); }
    /// Radius as a double, +inf when infinite.
    double value() const noexcept
    {
        return radius.value_or(std::numeric_limits<double>::infinity());
    }
};

/// Distance from t = 0 to the nearest complex pole of the Riccati solution
/// starting at y0: (sqrt2/4) |Log w|, w = (y0 - 1 - sqrt2)/(y0 - 1 + sqrt2),
/// with Log the principal complex logarithm. Infinite at either stationary
/// point. Throws InvalidArgument for non-finite y0.
RadiusReport riccati_radius(double y0);

/// Radius of the expansion of Y(t + dt) in powers of dt, for the Y(0) = 0
/// trajectory. Bounded below by sqrt2*pi/4. Throws InvalidArgument for t < 0.
RadiusReport riccati_multistage_radius(double t);

/// Time at which riccati_multistage_radius attains its minimum sqrt2*pi/4.
double riccati_multistage_radius_argmin();

/// Coefficient-based radius estimate from the last `window` coefficient
/// pairs. Uses the median of |c_k / c_{k+1}| when those ratios are stable;
/// if they oscillate (a complex-conjugate pair of singularities) it falls
/// back to the three-term estimate
///   R^2 = (c_k c_{k-2} - c_{k-1}^2) / (c_{k+1} c_{k-1} - c_k^2).
/// Throws InvalidArgument unless order >= window >= 4, and NotEstimableError
/// when the trailing coefficients contain zeros.
RadiusReport estimate_radius(const TruncatedSeries& s, std::size_t window);

/// Relative spread (max - min) / median above which ratio estimates are
/// treated as oscillating.
inline constexpr double ratio_dispersion_limit = 0.1;

}  // namespace serieslab
