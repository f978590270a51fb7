#include "twistsum/series.hpp"

#include "twistsum/errors.hpp"

#include <numeric>
#include <string>

namespace twistsum {

TruncatedSeries::TruncatedSeries(std::size_t truncation, int order)
    : order_(order), coeffs_(truncation + 1, PolynomialX(order))
{
}

TruncatedSeries::TruncatedSeries(std::size_t truncation, std::vector<PolynomialX> coeffs)
    : order_(1), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() > truncation + 1) {
        coeffs_.resize(truncation + 1);
    }
    for (const auto& c : coeffs_) {
        order_ = std::lcm(order_, c.order());
    }
    coeffs_.resize(truncation + 1, PolynomialX(order_));
    for (auto& c : coeffs_) {
        if (c.order() != order_) {
            c = c.promote(order_);
        }
    }
}

TruncatedSeries TruncatedSeries::constant(std::size_t truncation, const CyclotomicNumber& c)
{
    TruncatedSeries out(truncation, c.order());
    out.coeffs_[0] = PolynomialX(c);
    return out;
}

void TruncatedSeries::set_coeff(std::size_t n, PolynomialX p)
{
    const int k = std::lcm(order_, p.order());
    if (k != order_) {
        *this = promote(k);
    }
    coeffs_.at(n) = p.order() == k ? std::move(p) : p.promote(k);
}

TruncatedSeries TruncatedSeries::promote(int target) const
{
    TruncatedSeries out(truncation(), target);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        out.coeffs_[n] = coeffs_[n].promote(target);
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    const PolynomialX& c0 = coeffs_[0];
    if (c0.is_zero() || !c0.is_constant()) {
        throw DivisionByZero("series inverse needs a nonzero constant term");
    }
    const CyclotomicNumber inv0 = c0.coeff(0).inverse();
    TruncatedSeries out(truncation(), order_);
    out.coeffs_[0] = PolynomialX(inv0);
    // b_n = -(1/a_0) sum_{i=1}^{n} a_i b_{n-i}
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        PolynomialX acc(order_);
        for (std::size_t i = 1; i <= n; ++i) {
            if (coeffs_[i].is_zero() || out.coeffs_[n - i].is_zero()) {
                continue;
            }
            acc += coeffs_[i] * out.coeffs_[n - i];
        }
        out.coeffs_[n] = -(acc * inv0);
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    if (rhs.truncation() != truncation()) {
        throw DomainError("series truncation orders differ: " + std::to_string(truncation()) + " vs "
                          + std::to_string(rhs.truncation()));
    }
    order_ = std::lcm(order_, rhs.order_);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] += rhs.coeffs_[n];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    if (rhs.truncation() != truncation()) {
        throw DomainError("series truncation orders differ: " + std::to_string(truncation()) + " vs "
                          + std::to_string(rhs.truncation()));
    }
    order_ = std::lcm(order_, rhs.order_);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] -= rhs.coeffs_[n];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs)
{
    if (rhs.truncation() != truncation()) {
        throw DomainError("series truncation orders differ: " + std::to_string(truncation()) + " vs "
                          + std::to_string(rhs.truncation()));
    }
    const int k = std::lcm(order_, rhs.order_);
    std::vector<PolynomialX> out(coeffs_.size(), PolynomialX(k));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
            if (rhs.coeffs_[j].is_zero()) {
                continue;
            }
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    order_ = k;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const CyclotomicNumber& rhs)
{
    order_ = std::lcm(order_, rhs.order());
    for (auto& c : coeffs_) {
        c *= rhs;
        if (c.order() != order_) {
            c = c.promote(order_);
        }
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& rhs)
{
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    return *this;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a.coeffs_ == b.coeffs_;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a * b;
}

TruncatedSeries series_inv(const TruncatedSeries& a)
{
    return a.inverse();
}

TruncatedSeries series_exp_linear(const Rational& scale, std::size_t truncation, int order)
{
    TruncatedSeries out(truncation, order);
    Rational term(1);
    for (std::size_t n = 0; n <= truncation; ++n) {
        out.set_coeff(n, PolynomialX(CyclotomicNumber(term, order)));
        term *= scale;
        term /= static_cast<long>(n + 1);
    }
    return out;
}

TruncatedSeries series_exp_linear(const FormalX& scale, std::size_t truncation, int order)
{
    TruncatedSeries out(truncation, order);
    Rational term(1);
    for (std::size_t n = 0; n <= truncation; ++n) {
        out.set_coeff(n, PolynomialX::monomial(CyclotomicNumber(term, order), n));
        term *= scale.scale;
        term /= static_cast<long>(n + 1);
    }
    return out;
}

} // namespace twistsum
