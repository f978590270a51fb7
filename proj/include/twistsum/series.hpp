#pragma once

#include "twistsum/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace twistsum {

/// The formal variable x, optionally scaled: exp series of FormalX{c} is e^{c x z}.
struct FormalX {
    Rational scale{1};
};

/// Formal power series in z truncated after z^T. Coefficients are polynomials in x
/// over a common cyclotomic field. Coefficients are the plain Taylor coefficients
/// (no factorial scaling).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t truncation, int order = 1);
    TruncatedSeries(std::size_t truncation, std::vector<PolynomialX> coeffs);

    static TruncatedSeries constant(std::size_t truncation, const CyclotomicNumber& c);

    std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
    int order() const noexcept { return order_; }
    const PolynomialX& coeff(std::size_t n) const { return coeffs_.at(n); }
    const std::vector<PolynomialX>& coeffs() const noexcept { return coeffs_; }
    void set_coeff(std::size_t n, PolynomialX p);

    /// Multiplicative inverse through order T; the constant term must be a nonzero constant.
    TruncatedSeries inverse() const;
    TruncatedSeries promote(int target) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const CyclotomicNumber& rhs);
    TruncatedSeries& operator*=(const Rational& rhs);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const CyclotomicNumber& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& b) { return a *= b; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    int order_;
    std::vector<PolynomialX> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_inv(const TruncatedSeries& a);

/// Sum_{n<=T} (scale z)^n / n!.
TruncatedSeries series_exp_linear(const Rational& scale, std::size_t truncation, int order = 1);
/// Sum_{n<=T} (c x z)^n / n!, coefficients polynomial in x.
TruncatedSeries series_exp_linear(const FormalX& scale, std::size_t truncation, int order = 1);

} // namespace twistsum
