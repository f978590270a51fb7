#pragma once

#include "twistsum/cyclotomic.hpp"

#include <cstddef>
#include <vector>

namespace twistsum {

/// Dense univariate polynomial in x with coefficients in Q(zeta_k), a common order k.
/// The coefficient list is kept trimmed, so the zero polynomial has no coefficients.
class PolynomialX {
public:
    explicit PolynomialX(int order = 1) : order_(order) {}
    explicit PolynomialX(const CyclotomicNumber& constant);
    PolynomialX(int order, std::vector<CyclotomicNumber> coeffs);
    static PolynomialX from_rationals(const std::vector<Rational>& coeffs);
    static PolynomialX monomial(const CyclotomicNumber& c, std::size_t degree);
    /// The polynomial x over Q(zeta_order).
    static PolynomialX x(int order = 1);

    int order() const noexcept { return order_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const std::vector<CyclotomicNumber>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i (zero past the degree).
    CyclotomicNumber coeff(std::size_t i) const;

    CyclotomicNumber operator()(const Rational& at) const;
    CyclotomicNumber operator()(const CyclotomicNumber& at) const;
    std::complex<double> evaluate(std::complex<double> at) const;

    /// p(x + h).
    PolynomialX shifted(const Rational& h) const;
    PolynomialX derivative() const;
    PolynomialX promote(int target) const;

    PolynomialX operator-() const;
    PolynomialX& operator+=(const PolynomialX& rhs);
    PolynomialX& operator-=(const PolynomialX& rhs);
    PolynomialX& operator*=(const PolynomialX& rhs);
    PolynomialX& operator*=(const CyclotomicNumber& rhs);
    PolynomialX& operator*=(const Rational& rhs);

    friend PolynomialX operator+(PolynomialX a, const PolynomialX& b) { return a += b; }
    friend PolynomialX operator-(PolynomialX a, const PolynomialX& b) { return a -= b; }
    friend PolynomialX operator*(PolynomialX a, const PolynomialX& b) { return a *= b; }
    friend PolynomialX operator*(PolynomialX a, const CyclotomicNumber& b) { return a *= b; }
    friend PolynomialX operator*(const CyclotomicNumber& b, PolynomialX a) { return a *= b; }
    friend PolynomialX operator*(PolynomialX a, const Rational& b) { return a *= b; }
    friend PolynomialX operator*(const Rational& b, PolynomialX a) { return a *= b; }

    friend bool operator==(const PolynomialX& a, const PolynomialX& b);

private:
    void trim();

    int order_;
    std::vector<CyclotomicNumber> coeffs_;
};

/// Phi_k with rational coefficients, obtained by dividing x^k - 1 by Phi_d for every proper divisor d.
PolynomialX cyclotomic_polynomial(int k);

} // namespace twistsum
