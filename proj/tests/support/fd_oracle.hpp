#pragma once

// Test-only oracle: Taylor coefficients by finite differencing a trajectory
// from the adaptive reference integrator, sampled on both sides of t = 0.
//
// The stencil is a least-squares one: a polynomial of modest degree is
// fitted to many more samples than it has coefficients, and its low-order
// coefficients are read off. Plain interpolating stencils amplify the
// integrator's error too much for sixth derivatives.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "serieslab/integrate.hpp"
#include "serieslab/models.hpp"

namespace oracle {

// Chebyshev points of the first kind on [-half_width, half_width].
inline std::vector<double> chebyshev_nodes(std::size_t count, double half_width)
{
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = -half_width * std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * count));
    if (count % 2 == 1)
        out[count / 2] = 0.0;  // cos(pi/2) is not exactly zero in floating point
    return out;
}

// Coefficients a_0..a_max_k of the degree-`degree` least-squares polynomial
// through (nodes[j], values[j]).
inline std::vector<double> least_squares_taylor(const std::vector<double>& nodes, const std::vector<double>& values,
                                                std::size_t degree, std::size_t max_k)
{
    double scale = 0.0;
    for (double t : nodes)
        scale = std::max(scale, std::abs(t));
    const auto n = static_cast<Eigen::Index>(nodes.size());
    const auto cols = static_cast<Eigen::Index>(degree + 1);
    Eigen::MatrixXd v(n, cols);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double s = nodes[static_cast<std::size_t>(i)] / scale;
        double p = 1.0;
        for (Eigen::Index j = 0; j < cols; ++j, p *= s)
            v(i, j) = p;
        y(i) = values[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd a = v.colPivHouseholderQr().solve(y);
    std::vector<double> out(max_k + 1);
    for (std::size_t k = 0; k <= max_k; ++k)
        out[k] = a(static_cast<Eigen::Index>(k)) / std::pow(scale, static_cast<double>(k));
    return out;
}

// coefficients[c][k] approximates the k-th Taylor coefficient of component c.
inline std::vector<std::vector<double>> taylor_by_finite_differences(const serieslab::ModelInstance& model,
                                                                     std::size_t max_k,
                                                                     const std::vector<double>& nodes,
                                                                     std::size_t degree, double tol = 1e-13)
{
    std::vector<double> fwd{0.0}, bwd{0.0};
    for (double t : nodes)
        if (t != 0.0)
            (t > 0 ? fwd : bwd).push_back(std::abs(t));
    std::sort(fwd.begin(), fwd.end());
    std::sort(bwd.begin(), bwd.end());

    auto run = [&](const serieslab::ModelInstance& m, const std::vector<double>& grid) {
        return serieslab::reference_integrate(
            m, grid.back(), tol, {.grid = grid, .dense = serieslab::DenseOutput::step_to_grid});
    };
    serieslab::ModelInstance backward = model;
    backward.field = model.field.reversed();
    const auto ahead = run(model, fwd);
    const auto behind = run(backward, bwd);

    auto state_at = [&](double t) -> const std::vector<double>& {
        const auto& tr = t > 0 ? ahead : behind;
        const auto& grid = t > 0 ? fwd : bwd;
        const auto idx = std::lower_bound(grid.begin(), grid.end(), std::abs(t)) - grid.begin();
        return tr.states[static_cast<std::size_t>(idx)];
    };

    std::vector<std::vector<double>> out;
    for (std::size_t c = 0; c < model.dimension(); ++c) {
        std::vector<double> values;
        for (double t : nodes)
            values.push_back(state_at(t)[c]);
        out.push_back(least_squares_taylor(nodes, values, degree, max_k));
    }
    return out;
}

}  // namespace oracle
