#include "twistsum/polynomial.hpp"

#include "twistsum/errors.hpp"

#include <algorithm>
#include <numeric>

namespace twistsum {

PolynomialX::PolynomialX(const CyclotomicNumber& constant)
    : order_(constant.order()), coeffs_{constant}
{
    trim();
}

PolynomialX::PolynomialX(int order, std::vector<CyclotomicNumber> coeffs)
    : order_(order), coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_) {
        if (c.order() != order_) {
            order_ = std::lcm(order_, c.order());
        }
    }
    for (auto& c : coeffs_) {
        if (c.order() != order_) {
            c = c.promote(order_);
        }
    }
    trim();
}

PolynomialX PolynomialX::from_rationals(const std::vector<Rational>& coeffs)
{
    std::vector<CyclotomicNumber> c;
    c.reserve(coeffs.size());
    for (const auto& q : coeffs) {
        c.emplace_back(q, 1);
    }
    return PolynomialX(1, std::move(c));
}

PolynomialX PolynomialX::monomial(const CyclotomicNumber& c, std::size_t degree)
{
    std::vector<CyclotomicNumber> coeffs(degree + 1, CyclotomicNumber(c.order()));
    coeffs[degree] = c;
    return PolynomialX(c.order(), std::move(coeffs));
}

PolynomialX PolynomialX::x(int order)
{
    return monomial(CyclotomicNumber(Rational(1), order), 1);
}

void PolynomialX::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

CyclotomicNumber PolynomialX::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : CyclotomicNumber(order_);
}

CyclotomicNumber PolynomialX::operator()(const Rational& at) const
{
    CyclotomicNumber acc(order_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= at;
        acc += coeffs_[i];
    }
    return acc;
}

CyclotomicNumber PolynomialX::operator()(const CyclotomicNumber& at) const
{
    CyclotomicNumber acc(std::lcm(order_, at.order()));
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= at;
        acc += coeffs_[i];
    }
    return acc;
}

std::complex<double> PolynomialX::evaluate(std::complex<double> at) const
{
    std::complex<double> acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * at + coeffs_[i].to_complex();
    }
    return acc;
}

PolynomialX PolynomialX::shifted(const Rational& h) const
{
    // Horner in the ring: p(x + h) = (...((c_n)(x + h) + c_{n-1})(x + h) + ...).
    PolynomialX step(order_, {CyclotomicNumber(h, order_), CyclotomicNumber(Rational(1), order_)});
    PolynomialX acc(order_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= step;
        acc += PolynomialX(coeffs_[i]);
    }
    acc.order_ = order_;
    return acc;
}

PolynomialX PolynomialX::derivative() const
{
    if (coeffs_.size() <= 1) {
        return PolynomialX(order_);
    }
    std::vector<CyclotomicNumber> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    }
    return PolynomialX(order_, std::move(d));
}

PolynomialX PolynomialX::promote(int target) const
{
    PolynomialX out(target);
    out.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.coeffs_.push_back(c.promote(target));
    }
    return out;
}

PolynomialX PolynomialX::operator-() const
{
    PolynomialX out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

PolynomialX& PolynomialX::operator+=(const PolynomialX& rhs)
{
    const int k = std::lcm(order_, rhs.order_);
    if (k != order_) {
        *this = promote(k);
    }
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), CyclotomicNumber(k));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

PolynomialX& PolynomialX::operator-=(const PolynomialX& rhs)
{
    return *this += -rhs;
}

PolynomialX& PolynomialX::operator*=(const PolynomialX& rhs)
{
    const int k = std::lcm(order_, rhs.order_);
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        order_ = k;
        return *this;
    }
    std::vector<CyclotomicNumber> out(coeffs_.size() + rhs.coeffs_.size() - 1, CyclotomicNumber(k));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    order_ = k;
    trim();
    return *this;
}

PolynomialX& PolynomialX::operator*=(const CyclotomicNumber& rhs)
{
    const int k = std::lcm(order_, rhs.order());
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    order_ = k;
    trim();
    return *this;
}

PolynomialX& PolynomialX::operator*=(const Rational& rhs)
{
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    trim();
    return *this;
}

bool operator==(const PolynomialX& a, const PolynomialX& b)
{
    if (a.coeffs_.size() != b.coeffs_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (!(a.coeffs_[i] == b.coeffs_[i])) {
            return false;
        }
    }
    return true;
}

PolynomialX cyclotomic_polynomial(int k)
{
    return PolynomialX::from_rationals(cyclotomic_coeffs(k));
}

} // namespace twistsum
