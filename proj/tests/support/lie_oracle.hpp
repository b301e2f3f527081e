#pragma once

// Test-only oracle: Taylor coefficients by repeated symbolic differentiation
// along the vector field (Lie derivatives), independent of the series
// recursion used by the library.

#include <cstddef>
#include <map>
#include <vector>

#include "serieslab/polynomial_field.hpp"

namespace oracle {

using Exponents = std::vector<unsigned>;
using Poly = std::map<Exponents, double>;

inline Poly multiply(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t j = 0; j < e.size(); ++j)
                e[j] = ea[j] + eb[j];
            out[e] += ca * cb;
        }
    return out;
}

inline Poly partial(const Poly& p, std::size_t var)
{
    Poly out;
    for (const auto& [e, c] : p) {
        if (e[var] == 0)
            continue;
        Exponents d = e;
        d[var] -= 1;
        out[d] += c * e[var];
    }
    return out;
}

inline Poly to_poly(const std::vector<serieslab::Monomial>& eq)
{
    Poly p;
    for (const auto& m : eq)
        p[m.exponents] += m.coefficient;
    return p;
}

inline Poly lie_derivative(const Poly& p, const serieslab::PolynomialVectorField& f)
{
    Poly out;
    for (std::size_t j = 0; j < f.dimension(); ++j)
        for (const auto& [e, c] : multiply(partial(p, j), to_poly(f.equation(j))))
            out[e] += c;
    return out;
}

inline double evaluate(const Poly& p, const std::vector<double>& x)
{
    double sum = 0.0;
    for (const auto& [e, c] : p) {
        double term = c;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (unsigned k = 0; k < e[j]; ++k)
                term *= x[j];
        sum += term;
    }
    return sum;
}

// coefficients[i][k] = (D^k x_i)(x0) / k!
inline std::vector<std::vector<double>> taylor_by_differentiation(
    const serieslab::PolynomialVectorField& f, const std::vector<double>& x0, std::size_t order)
{
    const std::size_t d = f.dimension();
    std::vector<std::vector<double>> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        Exponents e(d, 0);
        e[i] = 1;
        Poly p{{e, 1.0}};
        double factorial = 1.0;
        for (std::size_t k = 0; k <= order; ++k) {
            if (k > 0) {
                p = lie_derivative(p, f);
                factorial *= static_cast<double>(k);
            }
            out[i].push_back(evaluate(p, x0) / factorial);
        }
    }
    return out;
}

}  // namespace oracle
