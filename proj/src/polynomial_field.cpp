#include "serieslab/polynomial_field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "serieslab/errors.hpp"

namespace serieslab {

unsigned Monomial::degree() const noexcept
{
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

PolynomialVectorField::PolynomialVectorField(std::size_t dimension,
                                             std::vector<std::vector<Monomial>> equations)
    : dimension_(dimension), equations_(std::move(equations))
{
    if (dimension_ == 0)
        throw InvalidArgument("PolynomialVectorField: dimension must be at least 1");
    if (equations_.size() != dimension_)
        throw InvalidArgument("PolynomialVectorField: expected " + std::to_string(dimension_) +
                              " equations, got " + std::to_string(equations_.size()));
    for (std::size_t i = 0; i < equations_.size(); ++i) {
        for (const auto& m : equations_[i]) {
            if (m.exponents.size() != dimension_)
                throw InvalidArgument("PolynomialVectorField: monomial in equation " +
                                      std::to_string(i) + " has " +
                                      std::to_string(m.exponents.size()) + " exponents");
            if (!std::isfinite(m.coefficient))
                throw InvalidArgument("PolynomialVectorField: non-finite coefficient in equation " +
                                      std::to_string(i));
        }
    }
    horner_.resize(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i)
        build_horner(equations_[i], horner_[i]);
}

int PolynomialVectorField::build_horner(std::vector<Monomial> terms,
                                        std::vector<HornerNode>& nodes) const
{
    const int index = static_cast<int>(nodes.size());
    nodes.emplace_back();

    // Pick the variable present in the most terms (lowest index on ties).
    int best = -1;
    std::size_t best_count = 0;
    for (std::size_t j = 0; j < dimension_; ++j) {
        const auto count = static_cast<std::size_t>(std::count_if(
            terms.begin(), terms.end(), [j](const Monomial& m) { return m.exponents[j] > 0; }));
        if (count > best_count) {
            best = static_cast<int>(j);
            best_count = count;
        }
    }
    if (best < 0) {
        double c = 0.0;
        for (const auto& m : terms)
            c += m.coefficient;
        nodes[index].constant = c;
        return index;
    }

    std::vector<Monomial> rest, factor;
    for (auto& m : terms) {
        if (m.exponents[best] > 0) {
            m.exponents[best] -= 1;
            factor.push_back(std::move(m));
        } else {
            rest.push_back(std::move(m));
        }
    }
    const int rest_node = rest.empty() ? -1 : build_horner(std::move(rest), nodes);
    const int factor_node = build_horner(std::move(factor), nodes);
    nodes[index].var = best;
    nodes[index].rest = rest_node;
    nodes[index].factor = factor_node;
    return index;
}

double PolynomialVectorField::eval_horner(const std::vector<HornerNode>& nodes, int node,
                                          std::span<const double> state) const
{
    const auto& n = nodes[node];
    if (n.var < 0)
        return n.constant;
    const double product = state[n.var] * eval_horner(nodes, n.factor, state);
    return n.rest < 0 ? product : eval_horner(nodes, n.rest, state) + product;
}

double evaluate_monomial(const Monomial& m, std::span<const double> state)
{
    double value = m.coefficient;
    for (std::size_t j = 0; j < m.exponents.size(); ++j)
        for (unsigned p = 0; p < m.exponents[j]; ++p)
            value *= state[j];
    return value;
}

std::vector<double> PolynomialVectorField::evaluate(std::span<const double> state) const
{
    if (state.size() != dimension_)
        throw InvalidArgument("evaluate: state has length " + std::to_string(state.size()) +
                              ", field dimension is " + std::to_string(dimension_));
    std::vector<double> out(dimension_, 0.0);
    for (std::size_t i = 0; i < dimension_; ++i)
        if (!equations_[i].empty())
            out[i] = eval_horner(horner_[i], 0, state);
    return out;
}

PolynomialVectorField PolynomialVectorField::reversed() const
{
    auto eqs = equations_;
    for (auto& eq : eqs)
        for (auto& m : eq)
            m.coefficient = -m.coefficient;
    return PolynomialVectorField(dimension_, std::move(eqs));
}

}  // namespace serieslab
