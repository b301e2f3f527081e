#include "serieslab/truncated_series.hpp"

#include <cmath>
#include <string>

#include "serieslab/errors.hpp"

namespace serieslab {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op)
{
    if (a.order() != b.order())
        throw InvalidArgument(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                              " vs " + std::to_string(b.order()) + ")");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients))
{
    if (coefficients_.empty())
        throw InvalidArgument("TruncatedSeries: at least one coefficient required");
    for (double c : coefficients_)
        if (!std::isfinite(c))
            throw InvalidArgument("TruncatedSeries: non-finite coefficient");
}

TruncatedSeries TruncatedSeries::zero(std::size_t order)
{
    return TruncatedSeries(std::vector<double>(order + 1, 0.0));
}

TruncatedSeries TruncatedSeries::constant(double value, std::size_t order)
{
    std::vector<double> c(order + 1, 0.0);
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::derivative() const
{
    if (order() == 0)
        return zero(0);
    std::vector<double> d(order());
    for (std::size_t k = 0; k < d.size(); ++k)
        d[k] = static_cast<double>(k + 1) * coefficients_[k + 1];
    return TruncatedSeries(std::move(d));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_order(a, b, "series_add");
    std::vector<double> c(a.order() + 1);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a[k] + b[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_order(a, b, "series_mul");
    const auto ac = a.coefficients();
    const auto bc = b.coefficients();
    std::vector<double> c(ac.size(), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i)
            c[k] += ac[i] * bc[k - i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_scale(const TruncatedSeries& a, double factor)
{
    std::vector<double> c(a.coefficients().begin(), a.coefficients().end());
    for (double& v : c)
        v *= factor;
    return TruncatedSeries(std::move(c));
}

double eval_series(const TruncatedSeries& s, double t) noexcept
{
    const auto c = s.coefficients();
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * t + c[k];
    return acc;
}

std::vector<double> SeriesSolution::eval(double t) const
{
    std::vector<double> out;
    out.reserve(components.size());
    for (const auto& s : components)
        out.push_back(eval_series(s, t));
    return out;
}

namespace {

// Incremental coefficient generator for one monomial. The monomial is
// written as a chain of state factors f_0 f_1 ... f_{m-1}; partial[j] holds
// the series of f_0 ... f_{j+1}.
class MonomialChain {
public:
    MonomialChain(const Monomial& m, std::size_t order) : coefficient_(m.coefficient)
    {
        for (std::size_t j = 0; j < m.exponents.size(); ++j)
            for (unsigned p = 0; p < m.exponents[j]; ++p)
                factors_.push_back(j);
        if (factors_.size() > 1)
            partial_.assign(factors_.size() - 1, std::vector<double>(order + 1, 0.0));
    }

    // k-th coefficient of the monomial, given state coefficients 0..k.
    double advance(std::size_t k, const std::vector<std::vector<double>>& x)
    {
        if (factors_.empty())
            return k == 0 ? coefficient_ : 0.0;
        const std::vector<double>* prev = &x[factors_[0]];
        for (std::size_t j = 1; j < factors_.size(); ++j) {
            const auto& rhs = x[factors_[j]];
            double acc = 0.0;
            for (std::size_t i = 0; i <= k; ++i)
                acc += (*prev)[i] * rhs[k - i];
            partial_[j - 1][k] = acc;
            prev = &partial_[j - 1];
        }
        return coefficient_ * (*prev)[k];
    }

private:
    double coefficient_;
    std::vector<std::size_t> factors_;
    std::vector<std::vector<double>> partial_;
};

}  // namespace

std::vector<TruncatedSeries> taylor_coefficients(const PolynomialVectorField& field,
                                                 std::span<const double> state,
                                                 std::size_t order)
{
    const std::size_t dim = field.dimension();
    if (state.size() != dim)
        throw InvalidArgument("taylor_coefficients: state has length " +
                              std::to_string(state.size()) + ", field dimension is " +
                              std::to_string(dim));

    std::vector<std::vector<double>> x(dim, std::vector<double>(order + 1, 0.0));
    for (std::size_t i = 0; i < dim; ++i)
        x[i][0] = state[i];

    std::vector<std::vector<MonomialChain>> chains(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (const auto& m : field.equation(i))
            chains[i].emplace_back(m, order);

    for (std::size_t k = 0; k < order; ++k) {
        // All chains must see x through index k before any x[.][k+1] is written.
        std::vector<double> rhs(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i)
            for (auto& chain : chains[i])
                rhs[i] += chain.advance(k, x);
        // The zeroth coefficient is the field at the expansion point; take it
        // from the factored evaluation so first-order terms match P(x0) bit for bit.
        if (k == 0 && order > 0)
            rhs = field.evaluate(state);
        for (std::size_t i = 0; i < dim; ++i)
            x[i][k + 1] = rhs[i] / static_cast<double>(k + 1);
    }

    std::vector<TruncatedSeries> out;
    out.reserve(dim);
    for (auto& c : x)
        out.emplace_back(std::move(c));
    return out;
}

SeriesSolution generate_taylor_solution(const ModelInstance& model, std::size_t order)
{
    if (order < 1)
        throw InvalidArgument("generate_taylor_solution: order must be at least 1");
    return SeriesSolution{taylor_coefficients(model.field, model.initial_state, order), model};
}

std::vector<TruncatedSeries> compose_field(const PolynomialVectorField& field,
                                           std::span<const TruncatedSeries> state)
{
    if (state.size() != field.dimension())
        throw InvalidArgument("compose_field: dimension mismatch");
    const std::size_t order = state.front().order();
    std::vector<TruncatedSeries> out;
    for (const auto& eq : field.equations()) {
        auto sum = TruncatedSeries::zero(order);
        for (const auto& m : eq) {
            auto term = TruncatedSeries::constant(m.coefficient, order);
            for (std::size_t j = 0; j < m.exponents.size(); ++j)
                for (unsigned p = 0; p < m.exponents[j]; ++p)
                    term = term * state[j];
            sum = sum + term;
        }
        out.push_back(std::move(sum));
    }
    return out;
}

}  // namespace serieslab
