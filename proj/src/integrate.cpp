#include "serieslab/integrate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "serieslab/errors.hpp"
#include "serieslab/exact_models.hpp"

namespace serieslab {

namespace {

// Shortest round-trip text, so metadata reads "0.2" rather than 0.20000000000000001.
std::string format_number(double v)
{
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

void check_grid(std::span<const double> grid, const char* who)
{
    if (grid.empty())
        throw InvalidArgument(std::string(who) + ": grid is empty");
    if (grid.front() != 0.0)
        throw InvalidArgument(std::string(who) + ": grid must start at 0");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw InvalidArgument(std::string(who) + ": grid must be strictly increasing");
}

bool runaway(const std::vector<double>& state)
{
    for (double v : state)
        if (!std::isfinite(v) || std::abs(v) > divergence_limit)
            return true;
    return false;
}

// Dormand-Prince 5(4) tableau.
namespace dp {
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace dp

using Vec = std::vector<double>;

Vec axpy(const Vec& y, double h, std::initializer_list<std::pair<double, const Vec*>> terms)
{
    Vec out = y;
    for (std::size_t i = 0; i < out.size(); ++i) {
        double acc = 0.0;
        for (const auto& [w, k] : terms)
            acc += w * (*k)[i];
        out[i] += h * acc;
    }
    return out;
}

Vec hermite(const Vec& y0, const Vec& f0, const Vec& y1, const Vec& f1, double h, double theta)
{
    const double t2 = theta * theta;
    const double t3 = t2 * theta;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + theta;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    Vec out(y0.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = h00 * y0[i] + h10 * h * f0[i] + h01 * y1[i] + h11 * h * f1[i];
    return out;
}

}  // namespace

std::vector<double> uniform_grid(double t_end, std::size_t n)
{
    if (n < 2)
        throw InvalidArgument("uniform_grid: need at least 2 points");
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = t_end * static_cast<double>(i) / static_cast<double>(n - 1);
    g.back() = t_end;
    return g;
}

Trajectory multistage_taylor(const ModelInstance& model, std::size_t order, double step,
                             double t_end)
{
    if (!(step > 0.0) || !std::isfinite(step))
        throw InvalidArgument("multistage_taylor: step must be positive");
    if (order < 2)
        throw InvalidArgument("multistage_taylor: order must be at least 2");
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw InvalidArgument("multistage_taylor: t_end must be positive");

    Trajectory traj;
    traj.provenance = Provenance::multistage;
    traj.component_names = model.component_names();
    traj.meta = {{"model", model.label},
                 {"order", std::to_string(order)},
                 {"step", format_number(step)}};
    traj.times.push_back(0.0);
    traj.states.push_back(model.initial_state);

    std::vector<double> state = model.initial_state;
    double t = 0.0;
    for (std::size_t k = 1; t < t_end; ++k) {
        double t_next = std::min(static_cast<double>(k) * step, t_end);
        if (t_end - t_next <= 1e-12 * t_end)
            t_next = t_end;
        const double dt = t_next - t;
        std::vector<double> next(state.size());
        try {
            const auto series = taylor_coefficients(model.field, state, order);
            for (std::size_t i = 0; i < state.size(); ++i)
                next[i] = eval_series(series[i], dt);
        } catch (const InvalidArgument&) {
            throw DivergenceError("multistage_taylor: non-finite series coefficients at step " +
                                      std::to_string(k),
                                  k);
        }
        if (runaway(next))
            throw DivergenceError("multistage_taylor: state diverged at step " + std::to_string(k) +
                                      " (t=" + format_number(t_next) + ")",
                                  k);
        state = std::move(next);
        t = t_next;
        traj.times.push_back(t);
        traj.states.push_back(state);
    }
    return traj;
}

Trajectory reference_integrate(const ModelInstance& model, double t_end, double tol,
                               const ReferenceOptions& opts)
{
    if (!(tol >= 1e-13 && tol <= 1e-3))
        throw InvalidArgument("reference_integrate: tol must lie in [1e-13, 1e-3]");
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw InvalidArgument("reference_integrate: t_end must be positive");
    const bool use_grid = !opts.grid.empty();
    if (use_grid) {
        check_grid(opts.grid, "reference_integrate");
        if (opts.grid.back() > t_end)
            throw InvalidArgument("reference_integrate: grid extends beyond t_end");
    }

    const auto& field = model.field;
    const std::size_t n = field.dimension();
    auto rhs = [&](const Vec& y) { return field.evaluate(y); };

    Trajectory traj;
    traj.provenance = Provenance::reference;
    traj.component_names = model.component_names();
    traj.meta = {{"model", model.label},
                 {"method", "dopri5"},
                 {"tol", format_number(tol)},
                 {"dense", opts.dense == DenseOutput::hermite ? "hermite" : "step_to_grid"}};

    Vec y = model.initial_state;
    Vec f = rhs(y);
    double t = 0.0;
    traj.times.push_back(0.0);
    traj.states.push_back(y);
    std::size_t next_grid = 1;
    const double t_stop = use_grid ? opts.grid.back() : t_end;

    const double atol = opts.abs_tol.value_or(tol);
    if (!(atol > 0.0))
        throw InvalidArgument("reference_integrate: absolute tolerance must be positive");
    auto scale = [&](const Vec& a, const Vec& b, std::size_t i) {
        return atol + tol * std::max(std::abs(a[i]), std::abs(b[i]));
    };
    auto rms = [&](const Vec& v, const Vec& ref) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = v[i] / scale(ref, ref, i);
            s += r * r;
        }
        return std::sqrt(s / static_cast<double>(n));
    };

    double h;
    {
        const double d0 = rms(y, y);
        const double d1 = rms(f, y);
        h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
        h = std::min(h, t_stop);
    }

    bool last_rejected = false;
    for (std::size_t steps = 0; t < t_stop; ++steps) {
        if (steps >= opts.max_steps)
            throw IntegrationError("reference_integrate: step budget exhausted at t=" +
                                       format_number(t),
                                   t);
        if (h < 1e-14 * std::max(1.0, std::abs(t)))
            throw IntegrationError("reference_integrate: step size underflow at t=" +
                                       format_number(t),
                                   t);

        double target = t_stop;
        if (use_grid && opts.dense == DenseOutput::step_to_grid)
            target = opts.grid[next_grid];
        double hs = h;
        bool lands = false;
        if (t + hs >= target || target - (t + hs) <= 1e-12 * std::max(1.0, std::abs(target))) {
            hs = target - t;
            lands = true;
        }

        using namespace dp;
        const Vec& k1 = f;
        const Vec k2 = rhs(axpy(y, hs, {{a21, &k1}}));
        const Vec k3 = rhs(axpy(y, hs, {{a31, &k1}, {a32, &k2}}));
        const Vec k4 = rhs(axpy(y, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const Vec k5 = rhs(axpy(y, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const Vec k6 = rhs(axpy(y, hs, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        const Vec y_new = axpy(y, hs, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        const Vec k7 = rhs(y_new);

        double err = 0.0;
        bool finite = true;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double r = e / scale(y, y_new, i);
            err += r * r;
            finite = finite && std::isfinite(y_new[i]);
        }
        err = std::sqrt(err / static_cast<double>(n));
        if (!finite || !std::isfinite(err)) {
            h = 0.2 * hs;
            last_rejected = true;
            continue;
        }

        double factor = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
        factor = std::clamp(factor, 0.2, last_rejected ? 1.0 : 5.0);
        if (err > 1.0) {
            h = hs * std::max(factor, 0.2);
            last_rejected = true;
            continue;
        }
        last_rejected = false;

        const double t_new = lands ? target : t + hs;
        if (use_grid) {
            while (next_grid < opts.grid.size() && opts.grid[next_grid] <= t_new) {
                const double tg = opts.grid[next_grid];
                traj.times.push_back(tg);
                if (tg == t_new)
                    traj.states.push_back(y_new);
                else
                    traj.states.push_back(hermite(y, f, y_new, k7, hs, (tg - t) / hs));
                ++next_grid;
            }
        } else {
            traj.times.push_back(t_new);
            traj.states.push_back(y_new);
        }
        t = t_new;
        y = y_new;
        f = k7;
        // A step shortened to hit a target says nothing about the next one.
        h = lands ? std::max(h, hs * factor) : hs * factor;
    }
    return traj;
}

Trajectory sample_series(const SeriesSolution& solution, std::span<const double> grid)
{
    check_grid(grid, "sample_series");
    Trajectory traj;
    traj.provenance = Provenance::series;
    traj.component_names = solution.model.component_names();
    traj.meta = {{"model", solution.model.label}, {"order", std::to_string(solution.order())}};
    for (double t : grid) {
        traj.times.push_back(t);
        traj.states.push_back(solution.eval(t));
    }
    return traj;
}

Trajectory riccati_exact_trajectory(double y0, std::span<const double> grid)
{
    check_grid(grid, "riccati_exact_trajectory");
    Trajectory traj;
    traj.provenance = Provenance::exact;
    traj.component_names = {"Y"};
    traj.meta = {{"model", "riccati"}, {"y0", format_number(y0)}};
    for (double t : grid) {
        traj.times.push_back(t);
        traj.states.push_back({riccati_exact(y0, t)});
    }
    return traj;
}

}  // namespace serieslab
