#include "serieslab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "serieslab/errors.hpp"

namespace serieslab {

double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double tol)
{
    if (!(lo < hi))
        throw InvalidArgument("find_root_bracketed: need lo < hi");
    if (!(tol > 0.0))
        throw InvalidArgument("find_root_bracketed: tolerance must be positive");
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(flo * fhi < 0.0))
        throw BracketError("find_root_bracketed: no sign change on [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "] (f(lo)=" + std::to_string(flo) +
                           ", f(hi)=" + std::to_string(fhi) + ")");

    auto done = [tol](double a, double b) {
        return std::abs(b - a) <= tol * std::max(1.0, std::min(std::abs(a), std::abs(b)));
    };
    std::uintmax_t max_iter = 400;
    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, max_iter);
    if (!done(a, b))
        throw AccuracyError("find_root_bracketed: bracket did not shrink to tolerance");
    const double fa = f(a);
    const double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    return 0.5 * (a + b);
}

namespace {

// 15-point Kronrod rule with its embedded 7-point Gauss rule, nodes on [0, 1)
// mirrored about the interval centre.
constexpr double kronrod_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kronrod_weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kronrod_nodes[1], [3], [5], [7].
constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod_15(const std::function<double(double)>& f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = kronrod_weights[7] * fc;
    double gauss = gauss_weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kronrod_nodes[i];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kronrod_weights[i] * pair;
        if (i % 2 == 1)
            gauss += gauss_weights[i / 2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol)
{
    if (a == b)
        return {0.0, 0.0};
    if (!(abs_tol > 0.0))
        throw InvalidArgument("integrate_adaptive: tolerance must be positive");
    const double sign = b > a ? 1.0 : -1.0;
    if (b < a)
        std::swap(a, b);

    constexpr std::size_t max_segments = 5000;
    std::priority_queue<Segment> heap;
    heap.push(gauss_kronrod_15(f, a, b));
    double total_error = heap.top().error;
    while (total_error > abs_tol && heap.size() < max_segments) {
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            break;
        heap.pop();
        const Segment left = gauss_kronrod_15(f, worst.a, mid);
        const Segment right = gauss_kronrod_15(f, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from scratch; the running total only steers refinement.
    double value = 0.0;
    double error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    if (!std::isfinite(value) || error > abs_tol)
        throw AccuracyError("integrate_adaptive: error estimate " + std::to_string(error) +
                            " exceeds tolerance " + std::to_string(abs_tol));
    return {sign * value, error};
}

}  // namespace serieslab
