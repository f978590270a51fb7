#pragma once

// Independent reference computations used only by the tests.

#include "twistsum/polynomial.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using twistsum::PolynomialX;
using twistsum::Rational;

// Bernoulli numbers from sum_{j=0}^{n} binom(n+1, j) B_j = 0.
inline std::vector<Rational> bernoulli(std::size_t n_max)
{
    std::vector<Rational> b{Rational(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += twistsum::binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(j)) * b[j];
        }
        acc /= -static_cast<long>(n + 1);
        b.push_back(acc);
    }
    return b;
}

// Classical Euler polynomials from E_n(x + 1) + E_n(x) = 2 x^n:
// E_n(x) = x^n - (1/2) sum_{j<n} binom(n, j) E_j(x).
inline std::vector<PolynomialX> euler_polys(std::size_t n_max)
{
    std::vector<PolynomialX> e;
    for (std::size_t n = 0; n <= n_max; ++n) {
        PolynomialX p = PolynomialX::monomial(twistsum::CyclotomicNumber(Rational(1), 1), n);
        for (std::size_t j = 0; j < n; ++j) {
            p -= e[j] * (twistsum::binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) / Rational(2));
        }
        e.push_back(p);
    }
    return e;
}

// Dirichlet eta by Borwein's algorithm (alternating series with Chebyshev weights).
inline std::complex<double> eta(std::complex<double> s, int n = 40)
{
    std::vector<double> d(static_cast<std::size_t>(n) + 1);
    double term = 1.0 / n;
    double acc = term;
    d[0] = n * acc;
    for (int i = 1; i <= n; ++i) {
        term *= static_cast<double>(n + i - 1) * (n - i + 1) * 4.0 / ((2.0 * i - 1.0) * (2.0 * i));
        acc += term;
        d[static_cast<std::size_t>(i)] = n * acc;
    }
    std::complex<double> sum{};
    for (int k = 0; k < n; ++k) {
        sum += (k % 2 == 0 ? 1.0 : -1.0) * (d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(n)])
               * std::exp(-s * std::log(k + 1.0));
    }
    return -sum / d[static_cast<std::size_t>(n)];
}

// sum_{n>=0} w^n (n + x)^{-s} for Re s > 1 by plain summation up to n < count.
inline std::complex<double> lerch_partial(std::complex<double> w, double s, double x, long count)
{
    std::complex<double> acc{};
    std::complex<double> p = 1.0;
    for (long n = 0; n < count; ++n) {
        acc += p * std::pow(n + x, -s);
        p *= w;
    }
    return acc;
}

} // namespace oracle
