#include "serieslab/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "serieslab/errors.hpp"
#include "serieslab/models.hpp"

namespace serieslab {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::string_view to_string(RadiusMethod method)
{
    switch (method) {
    case RadiusMethod::exact_riccati: return "exact_riccati";
    case RadiusMethod::exact_multistage: return "exact_multistage";
    case RadiusMethod::ratio_estimate: return "ratio_estimate";
    }
    return "unknown";
}

RadiusReport riccati_radius(double y0)
{
    if (!std::isfinite(y0))
        throw InvalidArgument("riccati_radius: y0 must be finite");
    if (std::abs(y0 - riccati_stable_point) <= 4.0 * std::numeric_limits<double>::epsilon())
        return {std::nullopt, RadiusMethod::exact_riccati,
                "stationary initial value 1+sqrt2: constant solution"};
    const double den = y0 + sqrt2 - 1.0;
    if (std::abs(den) <= 4.0 * std::numeric_limits<double>::epsilon())
        return {std::nullopt, RadiusMethod::exact_riccati,
                "stationary initial value 1-sqrt2: constant solution"};
    const std::complex<double> w((y0 - sqrt2 - 1.0) / den, 0.0);
    const double r = sqrt2 / 4.0 * std::abs(std::log(w));
    std::ostringstream detail;
    detail << "nearest pole of the closed-form solution, w=" << w.real();
    return {r, RadiusMethod::exact_riccati, detail.str()};
}

RadiusReport riccati_multistage_radius(double t)
{
    if (!(t >= 0.0) || !std::isfinite(t))
        throw InvalidArgument("riccati_multistage_radius: t must be finite and non-negative");
    const double L = std::log(sqrt2 + 1.0);
    const double pi = std::numbers::pi;
    const double r = sqrt2 / 4.0 * std::sqrt(4.0 * L * L - 8.0 * sqrt2 * L * t + 8.0 * t * t + pi * pi);
    return {r, RadiusMethod::exact_multistage, "Y(0)=0 trajectory, expansion about t"};
}

double riccati_multistage_radius_argmin()
{
    return sqrt2 / 2.0 * std::log(sqrt2 + 1.0);
}

RadiusReport estimate_radius(const TruncatedSeries& s, std::size_t window)
{
    const std::size_t n = s.order();
    if (window < 4 || window > n)
        throw InvalidArgument("estimate_radius: need order >= window >= 4 (order " +
                              std::to_string(n) + ", window " + std::to_string(window) + ")");
    const auto c = s.coefficients();
    for (std::size_t k = n - window; k <= n; ++k)
        if (c[k] == 0.0)
            throw NotEstimableError("estimate_radius: coefficient " + std::to_string(k) +
                                    " is zero; fewer than " + std::to_string(window) +
                                    " trailing nonzero coefficients");

    std::vector<double> ratios;
    for (std::size_t k = n - window; k < n; ++k)
        ratios.push_back(std::abs(c[k] / c[k + 1]));
    const double ratio_median = median(ratios);
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    const double dispersion = (*hi - *lo) / ratio_median;

    std::ostringstream detail;
    detail << "window=" << window << " dispersion=" << dispersion;
    if (dispersion <= ratio_dispersion_limit) {
        detail << " method=ratio_median";
        return {ratio_median, RadiusMethod::ratio_estimate, detail.str()};
    }

    std::vector<double> pair_estimates;
    for (std::size_t k = std::max<std::size_t>(n - window + 1, 2); k < n; ++k) {
        const double num = c[k + 1] * c[k - 1] - c[k] * c[k];
        const double den = c[k] * c[k - 2] - c[k - 1] * c[k - 1];
        if (num != 0.0 && den / num > 0.0)
            pair_estimates.push_back(std::sqrt(den / num));
    }
    if (pair_estimates.empty())
        throw NotEstimableError("estimate_radius: ratios oscillate (dispersion " +
                                std::to_string(dispersion) +
                                ") and no complex-pair estimate is available");
    detail << " method=complex_pair samples=" << pair_estimates.size();
    return {median(pair_estimates), RadiusMethod::ratio_estimate, detail.str()};
}

}  // namespace serieslab
