#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "serieslab/errors.hpp"
#include "serieslab/models.hpp"

using namespace serieslab;

namespace {

// Straightforward nested-loop evaluation with std::pow, kept separate from
// PolynomialVectorField::evaluate.
std::vector<double> naive_evaluate(const PolynomialVectorField& f, const std::vector<double>& x)
{
    std::vector<double> out;
    for (const auto& eq : f.equations()) {
        double sum = 0.0;
        for (const auto& m : eq) {
            double term = m.coefficient;
            for (std::size_t j = 0; j < x.size(); ++j)
                term *= std::pow(x[j], static_cast<double>(m.exponents[j]));
            sum += term;
        }
        out.push_back(sum);
    }
    return out;
}

}  // namespace

TEST(Riccati, MonomialsAndInitialState)
{
    const auto m = build_riccati(0.0);
    ASSERT_EQ(m.dimension(), 1u);
    const auto& eq = m.field.equation(0);
    ASSERT_EQ(eq.size(), 3u);
    EXPECT_EQ(eq[0].coefficient, 1.0);
    EXPECT_EQ(eq[0].exponents, std::vector<unsigned>{0});
    EXPECT_EQ(eq[1].coefficient, 2.0);
    EXPECT_EQ(eq[1].exponents, std::vector<unsigned>{1});
    EXPECT_EQ(eq[2].coefficient, -1.0);
    EXPECT_EQ(eq[2].exponents, std::vector<unsigned>{2});
    EXPECT_EQ(m.initial_state, std::vector<double>{0.0});
    EXPECT_EQ(m.field.evaluate(m.initial_state)[0], 1.0);
}

TEST(Riccati, StationaryPointAndSubstitution)
{
    const auto s = build_riccati(riccati_stable_point);
    EXPECT_NEAR(s.field.evaluate(s.initial_state)[0], 0.0, 1e-14);
    const auto five = build_riccati(5.0);
    EXPECT_EQ(five.field.evaluate(five.initial_state)[0], -14.0);
}

TEST(Riccati, RejectsNonFinite)
{
    EXPECT_THROW(build_riccati(std::nan("")), InvalidArgument);
    EXPECT_THROW(build_riccati(INFINITY), InvalidArgument);
}

TEST(LotkaVolterra, CaseOneSubstitution)
{
    const auto f = build_lotka_volterra({1, 1, 0.1, 1});
    const auto v = f.evaluate(std::vector<double>{14, 18});
    EXPECT_DOUBLE_EQ(v[0], -238.0);
    EXPECT_DOUBLE_EQ(v[1], 250.2);
}

TEST(LotkaVolterra, CaseFiveSubstitution)
{
    const auto f = build_lotka_volterra({1, 1, 1, 1});
    const auto v = f.evaluate(std::vector<double>{3, 2});
    EXPECT_EQ(v[0], -3.0);
    EXPECT_EQ(v[1], 4.0);
}

TEST(LotkaVolterra, RejectsNonPositiveParameters)
{
    EXPECT_THROW(build_lotka_volterra({0, 1, 1, 1}), InvalidArgument);
    EXPECT_THROW(build_lotka_volterra({1, -1, 1, 1}), InvalidArgument);
    EXPECT_THROW(lv_fixed_points({1, 1, 0, 1}), InvalidArgument);
    EXPECT_THROW(make_lotka_volterra_model({1, 1, 1, 1}, -1, 2), InvalidArgument);
}

TEST(LotkaVolterra, FixedPoints)
{
    const auto p1 = lv_fixed_points({1, 1, 0.1, 1});
    EXPECT_EQ(p1.saddle, (std::array<double, 2>{0, 0}));
    EXPECT_DOUBLE_EQ(p1.center[0], 0.1);
    EXPECT_DOUBLE_EQ(p1.center[1], 1.0);
    const auto p5 = lv_fixed_points({1, 1, 1, 1});
    EXPECT_EQ(p5.center, (std::array<double, 2>{1, 1}));
}

TEST(LotkaVolterra, FixedPointsAnnihilateField)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.05, 5.0);
    for (int i = 0; i < 200; ++i) {
        const LotkaVolterraParams p{u(rng), u(rng), u(rng), u(rng)};
        const auto f = build_lotka_volterra(p);
        const auto fp = lv_fixed_points(p);
        for (const auto& pt : {fp.saddle, fp.center}) {
            const auto v = f.evaluate(std::vector<double>(pt.begin(), pt.end()));
            EXPECT_LT(std::abs(v[0]), 1e-12);
            EXPECT_LT(std::abs(v[1]), 1e-12);
        }
    }
}

TEST(Sir, SubstitutionBiazarParameters)
{
    const auto f = build_sir({0.01, 0.02});
    const auto v = f.evaluate(std::vector<double>{20, 15, 10});
    EXPECT_NEAR(v[0], -3.0, 1e-14);
    EXPECT_NEAR(v[1], 2.7, 1e-14);
    EXPECT_NEAR(v[2], 0.3, 1e-14);
}

TEST(Sir, SubstitutionUnitRates)
{
    const auto v = build_sir({1, 1}).evaluate(std::vector<double>{20, 4, 10});
    EXPECT_EQ(v, (std::vector<double>{-80, 76, 4}));
}

TEST(Sir, NoInfectivesMeansNoChange)
{
    const auto v = build_sir({0.3, 0.7}).evaluate(std::vector<double>{12, 0, 5});
    for (double c : v)
        EXPECT_EQ(c, 0.0);
}

TEST(Sir, RejectsNonPositiveParameters)
{
    EXPECT_THROW(build_sir({0, 1}), InvalidArgument);
    EXPECT_THROW(build_sir({1, -0.5}), InvalidArgument);
}

TEST(Sir, DerivativeSumsToZero)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    const auto small = build_sir({0.01, 0.02});
    const auto unit = build_sir({1, 1});
    for (int i = 0; i < 1000; ++i) {
        const std::vector<double> x{u(rng), u(rng), u(rng)};
        const auto v = small.evaluate(x);
        EXPECT_LT(std::abs(v[0] + v[1] + v[2]), 1e-12);
        // Unit rates push components to ~1e4, where an ulp alone is ~2e-12.
        const auto w = unit.evaluate(x);
        const double scale = std::max({std::abs(w[0]), std::abs(w[1]), std::abs(w[2])});
        EXPECT_LE(std::abs(w[0] + w[1] + w[2]), 4.0 * std::numeric_limits<double>::epsilon() * scale);
    }
}

TEST(PolynomialVectorField, DimensionMismatch)
{
    const auto f = build_sir({1, 1});
    EXPECT_THROW(f.evaluate(std::vector<double>{1, 2}), InvalidArgument);
    EXPECT_THROW(PolynomialVectorField(2, {{{1.0, {1}}}, {}}), InvalidArgument);
    EXPECT_THROW(PolynomialVectorField(1, {{{NAN, {1}}}}), InvalidArgument);
    EXPECT_THROW(PolynomialVectorField(0, {}), InvalidArgument);
}

TEST(PolynomialVectorField, StatesMayBeNegative)
{
    const auto f = build_lotka_volterra({1, 1, 1, 1});
    const auto v = f.evaluate(std::vector<double>{-2, 3});
    EXPECT_EQ(v[0], -2.0 * (1 - 3));
    EXPECT_EQ(v[1], -3.0 * (1 + 2));
}

TEST(PolynomialVectorField, MatchesNaiveEvaluationOnRandomFields)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> dim_dist(1, 3);
    std::uniform_int_distribution<unsigned> exp_dist(0, 3);
    std::uniform_int_distribution<int> count_dist(1, 5);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = dim_dist(rng);
        std::vector<std::vector<Monomial>> eqs(d);
        for (auto& eq : eqs) {
            const int terms = count_dist(rng);
            for (int t = 0; t < terms; ++t) {
                Monomial m{coef(rng), {}};
                for (std::size_t j = 0; j < d; ++j)
                    m.exponents.push_back(exp_dist(rng));
                eq.push_back(m);
            }
        }
        const PolynomialVectorField f(d, eqs);
        std::vector<double> x(d);
        for (auto& v : x)
            v = val(rng);
        const auto got = f.evaluate(x);
        const auto want = naive_evaluate(f, x);
        for (std::size_t i = 0; i < d; ++i) {
            const double scale = std::max(1.0, std::abs(want[i]));
            EXPECT_LT(std::abs(got[i] - want[i]) / scale, 1e-14) << "trial " << trial;
        }
    }
}

TEST(ModelInstance, GenericConstructor)
{
    const auto m = make_model(ModelKind::sir, {{"beta", 0.01}, {"gamma", 0.02}}, {20, 15, 10}, "biazar");
    EXPECT_EQ(m.kind, ModelKind::sir);
    EXPECT_EQ(m.label, "biazar");
    EXPECT_EQ(m.param("gamma"), 0.02);
    EXPECT_EQ(m.component_names(), (std::vector<std::string>{"x", "y", "z"}));
    EXPECT_THROW(make_model(ModelKind::sir, {{"beta", 0.01}}, {20, 15, 10}), InvalidArgument);
    EXPECT_THROW(make_model(ModelKind::riccati, {}, {1, 2}), InvalidArgument);
    EXPECT_THROW(parse_model_kind("seir"), InvalidArgument);
}
