#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "serieslab/models.hpp"
#include "serieslab/trajectory.hpp"
#include "serieslab/truncated_series.hpp"

namespace serieslab {

/// Piecewise Taylor stepping: re-expand to `order` about the current state,
/// advance by `step` (the last step may be shorter), repeat until t_end.
/// The step is fixed; choosing it well below the local radius of convergence
/// is the caller's job.
/// Throws InvalidArgument for step <= 0, order < 2 or t_end <= 0, and
/// DivergenceError (with the failing step index) when a state becomes
/// non-finite or exceeds divergence_limit in magnitude.
Trajectory multistage_taylor(const ModelInstance& model, std::size_t order, double step,
                             double t_end);

inline constexpr double divergence_limit = 1e12;

enum class DenseOutput {
    hermite,      ///< cubic Hermite interpolation inside accepted steps
    step_to_grid  ///< steps are shortened to land exactly on every grid time
};

struct ReferenceOptions {
    /// Sample times in [0, t_end], increasing, starting at 0. Empty means
    /// "record every accepted step".
    std::vector<double> grid;
    DenseOutput dense = DenseOutput::hermite;
    /// Absolute part of the error scale; defaults to `tol`. Positive-state
    /// models whose components get tiny (prey near extinction) need a much
    /// smaller value so that relative accuracy is kept.
    std::optional<double> abs_tol;
    std::size_t max_steps = 20'000'000;
};

/// Dormand-Prince 5(4) embedded pair with mixed absolute/relative error
/// control (rtol = tol, atol = opts.abs_tol or tol).
/// Throws InvalidArgument for tol outside [1e-13, 1e-3], t_end <= 0 or a
/// malformed grid; IntegrationError (carrying the last good time) on step
/// size underflow or when max_steps is exhausted.
Trajectory reference_integrate(const ModelInstance& model, double t_end, double tol,
                               const ReferenceOptions& opts = {});

/// Evaluates every component series on `grid` (increasing, starting at 0).
Trajectory sample_series(const SeriesSolution& solution, std::span<const double> grid);

/// Closed-form Riccati trajectory on `grid`. Propagates BlowUpError.
Trajectory riccati_exact_trajectory(double y0, std::span<const double> grid);

/// n evenly spaced times from 0 to t_end inclusive (n >= 2).
std::vector<double> uniform_grid(double t_end, std::size_t n);

}  // namespace serieslab
