#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace serieslab {

/// A single term `coefficient * x_0^e_0 * ... * x_{d-1}^e_{d-1}`.
struct Monomial {
    double coefficient = 0.0;
    std::vector<unsigned> exponents;

    unsigned degree() const noexcept;
};

/// Right-hand side of an autonomous ODE system dx/dt = P(x) where every
/// component P_i is a polynomial in the state, stored as a monomial list.
/// Immutable once constructed.
class PolynomialVectorField {
public:
    /// Throws InvalidArgument when `equations.size() != dimension`, when a
    /// monomial's exponent vector has the wrong length, or when a
    /// coefficient is not finite.
    PolynomialVectorField(std::size_t dimension, std::vector<std::vector<Monomial>> equations);

    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<std::vector<Monomial>>& equations() const noexcept { return equations_; }
    const std::vector<Monomial>& equation(std::size_t i) const { return equations_.at(i); }

    /// Componentwise polynomial value at `state`, computed with a multivariate
    /// Horner scheme (common variable factors pulled out greedily, so
    /// x(a - b y) is evaluated in exactly that form). States are not required
    /// to be non-negative.
    std::vector<double> evaluate(std::span<const double> state) const;

    /// Same field with every coefficient negated: the time-reversed system.
    PolynomialVectorField reversed() const;

private:
    // value = rest + x[var] * factor, or a constant leaf when var < 0.
    struct HornerNode {
        int var = -1;
        double constant = 0.0;
        int rest = -1;
        int factor = -1;
    };

    int build_horner(std::vector<Monomial> terms, std::vector<HornerNode>& nodes) const;
    double eval_horner(const std::vector<HornerNode>& nodes, int node,
                       std::span<const double> state) const;

    std::size_t dimension_;
    std::vector<std::vector<Monomial>> equations_;
    std::vector<std::vector<HornerNode>> horner_;
};

double evaluate_monomial(const Monomial& m, std::span<const double> state);

}  // namespace serieslab
