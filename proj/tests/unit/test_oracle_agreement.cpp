#include <cmath>

#include <gtest/gtest.h>

#include "serieslab/convergence.hpp"
#include "serieslab/truncated_series.hpp"
#include "support/fd_oracle.hpp"

using namespace serieslab;

namespace {

struct Case {
    ModelInstance model;
    double half_width;  // 0.4 of the radius of convergence at t = 0
};

std::vector<Case> cases()
{
    return {
        {build_riccati(0.0), 0.4 * riccati_radius(0.0).value()},
        {make_lotka_volterra_model({1, 1, 1, 1}, 3, 2), 0.295},
        {make_sir_model({0.01, 0.02}, 20, 15, 10), 3.68},
    };
}

}  // namespace

TEST(FiniteDifferenceOracle, ReproducesPolynomials)
{
    const auto nodes = oracle::chebyshev_nodes(41, 2.0);
    // p(t) = 2 - t + 3t^3 + 0.5t^4
    std::vector<double> values;
    for (double t : nodes)
        values.push_back(2 - t + 3 * t * t * t + 0.5 * t * t * t * t);
    const auto c = oracle::least_squares_taylor(nodes, values, 10, 5);
    const double expected[] = {2, -1, 0, 3, 0.5, 0};
    for (std::size_t k = 0; k <= 5; ++k)
        EXPECT_NEAR(c[k], expected[k], 1e-11) << k;
}

TEST(FiniteDifferenceOracle, AgreesWithSeriesCoefficients)
{
    for (const auto& [model, half_width] : cases()) {
        const auto series = generate_taylor_solution(model, 8);
        const auto fd = oracle::taylor_by_finite_differences(model, 6, oracle::chebyshev_nodes(161, half_width), 24);
        for (std::size_t c = 0; c < model.dimension(); ++c)
            for (std::size_t k = 0; k <= 6; ++k) {
                const double want = series.components[c][k];
                // An exactly zero coefficient is held to the same bound absolutely.
                const double scale = want == 0.0 ? 1.0 : std::abs(want);
                EXPECT_LT(std::abs(fd[c][k] - want) / scale, 1e-6) << model.label << " c=" << c << " k=" << k;
            }
    }
}
