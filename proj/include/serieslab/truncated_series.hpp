#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "serieslab/models.hpp"

namespace serieslab {

/// Coefficients c_0..c_N of a power series in t, truncated after t^N.
class TruncatedSeries {
public:
    /// Throws InvalidArgument when empty or when any coefficient is not finite.
    explicit TruncatedSeries(std::vector<double> coefficients);

    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries constant(double value, std::size_t order);

    std::size_t order() const noexcept { return coefficients_.size() - 1; }
    std::span<const double> coefficients() const noexcept { return coefficients_; }
    double operator[](std::size_t k) const { return coefficients_.at(k); }

    /// d/dt of the series: order drops by one (order 0 gives the zero series).
    TruncatedSeries derivative() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<double> coefficients_;
};

/// Coefficientwise sum. Throws InvalidArgument on order mismatch.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
/// Truncated Cauchy product c_k = sum_{i<=k} a_i b_{k-i}. Throws InvalidArgument on
/// order mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, double factor);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }
inline TruncatedSeries operator*(double f, const TruncatedSeries& a) { return series_scale(a, f); }

/// Horner evaluation of sum c_k t^k.
double eval_series(const TruncatedSeries& s, double t) noexcept;

/// One truncated series per state component, all of the same order, with
/// c_0 equal to the model's initial state.
struct SeriesSolution {
    std::vector<TruncatedSeries> components;
    ModelInstance model;

    std::size_t order() const noexcept { return components.front().order(); }
    std::vector<double> eval(double t) const;
};

/// Taylor coefficients of the solution of dx/dt = field(x), x(0) = state,
/// through t^order. Built by the power-matching recursion
/// (k+1) c_{i,k+1} = [t^k] P_i(x(t)), with each monomial's product series
/// updated incrementally so a full solve costs O(order^2 * total degree).
std::vector<TruncatedSeries> taylor_coefficients(const PolynomialVectorField& field,
                                                 std::span<const double> state,
                                                 std::size_t order);

/// Throws InvalidArgument when order < 1.
SeriesSolution generate_taylor_solution(const ModelInstance& model, std::size_t order);

/// Series of the vector field composed with the series state, computed with
/// the series_add/series_mul arithmetic rather than the incremental recursion.
std::vector<TruncatedSeries> compose_field(const PolynomialVectorField& field,
                                           std::span<const TruncatedSeries> state);

inline constexpr std::size_t default_series_order = 5;

}  // namespace serieslab
