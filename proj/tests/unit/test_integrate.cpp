#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "serieslab/errors.hpp"
#include "serieslab/exact_models.hpp"
#include "serieslab/integrate.hpp"

using namespace serieslab;

namespace {

double riccati_end_error(std::size_t order, double step, double t_end)
{
    const auto tr = multistage_taylor(build_riccati(0.0), order, step, t_end);
    return std::abs(tr.back()[0] - riccati_exact(0.0, t_end));
}

}  // namespace

TEST(Multistage, RiccatiReachesExactSolution)
{
    EXPECT_LT(riccati_end_error(5, 0.2, 5.0), 1e-6);
    const auto tr = multistage_taylor(build_riccati(0.0), 5, 0.2, 5.0);
    EXPECT_NEAR(tr.back()[0], std::numbers::sqrt2 + 1.0, 1e-3);
    EXPECT_EQ(tr.size(), 26u);
    EXPECT_EQ(tr.times.back(), 5.0);
    EXPECT_NO_THROW(tr.check_invariants());
    EXPECT_EQ(tr.provenance, Provenance::multistage);
}

TEST(Multistage, SingleStageIsTheSeries)
{
    for (const auto& model : {build_riccati(0.0), make_sir_model({1, 1}, 20, 4, 10),
                              make_lotka_volterra_model({1, 1, 1, 1}, 3, 2)}) {
        const double t_end = 0.7;
        const auto tr = multistage_taylor(model, 6, 5.0, t_end);
        ASSERT_EQ(tr.size(), 2u);
        const auto direct = generate_taylor_solution(model, 6).eval(t_end);
        EXPECT_EQ(tr.back(), direct) << model.label;
    }
}

TEST(Multistage, FinalPartialStep)
{
    const auto tr = multistage_taylor(build_riccati(0.0), 4, 0.3, 1.0);
    EXPECT_EQ(tr.times, (std::vector<double>{0.0, 0.3, 0.6, 0.8999999999999999, 1.0}));
}

TEST(Multistage, StepBeyondRadiusFails)
{
    // The expansion radius never drops below sqrt2*pi/4 ~ 1.11 along this
    // trajectory; a step of 2 exceeds it near the start.
    try {
        const auto tr = multistage_taylor(build_riccati(0.0), 5, 2.0, 10.0);
        double worst = 0.0;
        for (std::size_t i = 0; i < tr.size(); ++i)
            worst = std::max(worst, std::abs(tr.states[i][0] - riccati_exact(0.0, tr.times[i])));
        EXPECT_GT(worst, 1.0);
    } catch (const DivergenceError& e) {
        EXPECT_GE(e.step_index(), 1u);
    }
    EXPECT_THROW(multistage_taylor(build_riccati(0.0), 5, 2.0, 10.0), DivergenceError);
}

TEST(Multistage, ArgumentChecks)
{
    const auto m = build_riccati(0.0);
    EXPECT_THROW(multistage_taylor(m, 5, 0.0, 1.0), InvalidArgument);
    EXPECT_THROW(multistage_taylor(m, 5, -0.1, 1.0), InvalidArgument);
    EXPECT_THROW(multistage_taylor(m, 1, 0.1, 1.0), InvalidArgument);
    EXPECT_THROW(multistage_taylor(m, 5, 0.1, 0.0), InvalidArgument);
}

TEST(Multistage, ConvergenceOrderUnderStepHalving)
{
    for (std::size_t n : {3u, 4u, 5u}) {
        const double ratio = riccati_end_error(n, 0.1, 2.0) / riccati_end_error(n, 0.05, 2.0);
        EXPECT_GE(ratio, std::pow(2.0, n - 1.0)) << "N=" << n;
        EXPECT_LE(ratio, std::pow(2.0, n + 1.0)) << "N=" << n;
    }
}

TEST(Multistage, MatchesReferenceOverLongWindow)
{
    const auto model = build_riccati(0.0);
    const auto ms = multistage_taylor(model, 8, 0.1, 10.0);
    const auto ref = reference_integrate(model, 10.0, 1e-12, {.grid = ms.times, .dense = DenseOutput::step_to_grid});
    ASSERT_EQ(ref.size(), ms.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < ms.size(); ++i)
        worst = std::max(worst, std::abs(ms.states[i][0] - ref.states[i][0]));
    EXPECT_LT(worst, 1e-8);
}

TEST(Multistage, SirPopulationPerStep)
{
    const auto tr = multistage_taylor(make_sir_model({1, 1}, 20, 4, 10), 5, 0.01, 5.0);
    for (std::size_t i = 1; i < tr.size(); ++i) {
        const auto& a = tr.states[i - 1];
        const auto& b = tr.states[i];
        EXPECT_LT(std::abs((b[0] + b[1] + b[2]) - (a[0] + a[1] + a[2])), 1e-9);
    }
}

TEST(Reference, RiccatiAtOne)
{
    const auto tr = reference_integrate(build_riccati(0.0), 1.0, 1e-10);
    EXPECT_NEAR(tr.back()[0], riccati_exact(0.0, 1.0), 1e-9);
    EXPECT_NEAR(tr.back()[0], 1.68950, 1e-5);
    EXPECT_EQ(tr.times.back(), 1.0);
    EXPECT_NO_THROW(tr.check_invariants());
}

TEST(Reference, LotkaVolterraCaseFiveConserves)
{
    const LotkaVolterraParams p{1, 1, 1, 1};
    const auto tr = reference_integrate(make_lotka_volterra_model(p, 3, 2), 20.0, 1e-10,
                                        {.grid = uniform_grid(20.0, 4001)});
    const double h0 = lv_conserved(3, 2, p);
    for (const auto& s : tr.states)
        EXPECT_LT(std::abs(lv_conserved(s[0], s[1], p) - h0), 1e-6);
}

TEST(Reference, SirLongTimeLimit)
{
    const auto model = make_sir_model({0.01, 0.02}, 20, 15, 10);
    const auto tr = reference_integrate(model, 2000.0, 1e-10, {.grid = {0.0, 1000.0, 2000.0}, .abs_tol = 1e-20});
    EXPECT_NEAR(tr.back()[0], 5.02e-7, 0.01 * 5.02e-7);
    EXPECT_LT(tr.back()[1], 1e-10);
    EXPECT_NEAR(tr.back()[0], sir_endpoints(model).x_limit, 1e-6 * 5.02e-7);
}

TEST(Reference, SirPopulationDrift)
{
    const auto tr = reference_integrate(make_sir_model({0.01, 0.02}, 20, 15, 10), 100.0, 1e-10);
    for (const auto& s : tr.states)
        EXPECT_LT(std::abs(s[0] + s[1] + s[2] - 45.0), 1e-10);
}

TEST(Reference, TighterToleranceConverges)
{
    for (const auto& model : {build_riccati(0.0), make_lotka_volterra_model({1, 1, 1, 1}, 3, 2),
                              make_sir_model({1, 1}, 20, 4, 10)}) {
        for (double tol : {1e-6, 1e-8, 1e-10}) {
            const auto loose = reference_integrate(model, 5.0, tol);
            const auto tight = reference_integrate(model, 5.0, tol * 1e-3);
            for (std::size_t i = 0; i < model.dimension(); ++i) {
                const double scale = std::max(1.0, std::abs(tight.back()[i]));
                EXPECT_LT(std::abs(loose.back()[i] - tight.back()[i]), 10.0 * tol * scale)
                    << model.label << " tol=" << tol;
            }
        }
    }
}

TEST(Reference, HermiteGridMatchesSteppedGrid)
{
    const auto model = make_lotka_volterra_model({1, 1, 1, 1}, 3, 2);
    const auto grid = uniform_grid(6.0, 301);
    const auto dense = reference_integrate(model, 6.0, 1e-12, {.grid = grid});
    const auto stepped = reference_integrate(model, 6.0, 1e-12, {.grid = grid, .dense = DenseOutput::step_to_grid});
    ASSERT_EQ(dense.size(), grid.size());
    ASSERT_EQ(stepped.size(), grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_EQ(dense.times[i], grid[i]);
        for (std::size_t c = 0; c < 2; ++c)
            EXPECT_LT(std::abs(dense.states[i][c] - stepped.states[i][c]), 1e-8);
    }
}

TEST(Reference, Errors)
{
    const auto m = build_riccati(0.0);
    EXPECT_THROW(reference_integrate(m, 1.0, 1e-14), InvalidArgument);
    EXPECT_THROW(reference_integrate(m, 1.0, 1e-2), InvalidArgument);
    EXPECT_THROW(reference_integrate(m, -1.0, 1e-8), InvalidArgument);
    EXPECT_THROW(reference_integrate(m, 1.0, 1e-8, {.grid = {0.5, 1.0}}), InvalidArgument);
    EXPECT_THROW(reference_integrate(m, 1.0, 1e-8, {.grid = {0.0, 2.0}}), InvalidArgument);
    // Below the unstable point the solution blows up at t ~ 0.623.
    try {
        reference_integrate(build_riccati(-1.0), 1.0, 1e-8);
        FAIL() << "expected IntegrationError";
    } catch (const IntegrationError& e) {
        EXPECT_NEAR(e.last_good_time(), *riccati_real_pole(-1.0), 1e-3);
    }
}

TEST(SampleSeries, GridStartingAtZero)
{
    const auto sol = generate_taylor_solution(make_sir_model({1, 1}, 20, 4, 10), 5);
    const std::vector<double> grid{0.0};
    const auto tr = sample_series(sol, grid);
    EXPECT_EQ(tr.back(), (std::vector<double>{20, 4, 10}));
    EXPECT_EQ(tr.provenance, Provenance::series);
    const std::vector<double> bad{0.1, 0.2};
    EXPECT_THROW(sample_series(sol, bad), InvalidArgument);
}

TEST(SampleSeries, RiccatiUsefulOnlyNearOrigin)
{
    const auto grid = uniform_grid(3.0, 301);
    const auto series = sample_series(generate_taylor_solution(build_riccati(0.0), 5), grid);
    const auto exact = riccati_exact_trajectory(0.0, grid);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double rel = std::abs(series.states[i][0] - exact.states[i][0]) / std::abs(exact.states[i][0]);
        if (grid[i] < 0.6)
            EXPECT_LT(rel, 0.01) << grid[i];
        if (grid[i] > 2.0)
            EXPECT_GT(rel, 1.0) << grid[i];
    }
}

TEST(SampleSeries, LotkaVolterraCaseFiveLeavesConservedCurve)
{
    const LotkaVolterraParams p{1, 1, 1, 1};
    const auto sol = generate_taylor_solution(make_lotka_volterra_model(p, 3, 2), 5);
    const auto v = sol.eval(4.0);
    const double h0 = lv_conserved(3, 2, p);
    // Leaving the positive quadrant is itself a violation of the invariant.
    if (v[0] > 0 && v[1] > 0)
        EXPECT_GT(std::abs(lv_conserved(v[0], v[1], p) - h0), 1.0);
    else
        SUCCEED();
}

TEST(SampleSeries, SirSeriesConservesPopulation)
{
    const auto sol = generate_taylor_solution(make_sir_model({0.01, 0.02}, 20, 15, 10), 5);
    const auto tr = sample_series(sol, uniform_grid(10.0, 101));
    for (const auto& s : tr.states)
        EXPECT_NEAR(s[0] + s[1] + s[2], 45.0, 1e-11);
}
