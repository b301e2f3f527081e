#pragma once

#include <functional>

namespace serieslab {

/// Bracketed root of a scalar function (TOMS 748: bisection safeguarded
/// with secant and inverse-cubic steps). The returned root lies inside a
/// final bracket of width <= tol * max(1, |r|).
/// Throws InvalidArgument unless lo < hi and tol > 0, BracketError when
/// f(lo) and f(hi) have the same sign, AccuracyError when the iteration
/// budget is exhausted.
double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double tol = 1e-12);

struct QuadratureResult {
    double value;
    double error_estimate;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b]: the
/// segment with the largest |K15 - G7| is bisected until the summed estimate
/// meets `abs_tol`. The rule never samples the endpoints, so integrable
/// endpoint singularities are allowed. Throws AccuracyError when the estimate
/// misses `abs_tol` within the segment budget.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-9);

}  // namespace serieslab
