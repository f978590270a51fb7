#include "twistsum/cyclotomic.hpp"

#include "qpoly.hpp"
#include "twistsum/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

namespace twistsum {

using detail::QPoly;

namespace {

QPoly compute_cyclotomic(int k);

class CyclotomicTable {
public:
    const QPoly& get(int k)
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find(k); it != table_.end()) {
                return *it->second;
            }
        }
        // Computed outside the lock: compute_cyclotomic recurses into get() for the divisors.
        auto fresh = std::make_unique<QPoly>(compute_cyclotomic(k));
        std::lock_guard lock(mutex_);
        auto [it, inserted] = table_.try_emplace(k, std::move(fresh));
        return *it->second;
    }

private:
    std::mutex mutex_;
    std::map<int, std::unique_ptr<const QPoly>> table_;
};

CyclotomicTable& table()
{
    static CyclotomicTable instance;
    return instance;
}

QPoly compute_cyclotomic(int k)
{
    QPoly num(static_cast<std::size_t>(k) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(k)] = 1;
    for (int d = 1; d < k; ++d) {
        if (k % d == 0) {
            auto [q, r] = detail::divmod(num, table().get(d));
            num = std::move(q);
        }
    }
    return num;
}

void check_order(int order)
{
    if (order < 1) {
        throw DomainError("cyclotomic order must be >= 1, got " + std::to_string(order));
    }
}

long long reduce_exponent(long long t, int k)
{
    long long r = t % k;
    return r < 0 ? r + k : r;
}

} // namespace

const std::vector<Rational>& cyclotomic_coeffs(int k)
{
    check_order(k);
    return table().get(k);
}

int totient(int k)
{
    return static_cast<int>(cyclotomic_coeffs(k).size()) - 1;
}

CyclotomicNumber::CyclotomicNumber(int order) : order_(order)
{
    coeffs_.resize(static_cast<std::size_t>(totient(order)));
}

CyclotomicNumber::CyclotomicNumber(const Rational& value, int order) : CyclotomicNumber(order)
{
    coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs))
{
    const QPoly& phi = cyclotomic_coeffs(order);
    detail::reduce_monic(coeffs_, phi);
    coeffs_.resize(phi.size() - 1);
}

CyclotomicNumber CyclotomicNumber::root(int order, long long t)
{
    check_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(reduce_exponent(t, order)) + 1);
    c.back() = 1;
    return CyclotomicNumber(order, std::move(c));
}

bool CyclotomicNumber::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool CyclotomicNumber::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

Rational CyclotomicNumber::rational() const
{
    if (!is_rational()) {
        throw DomainError("cyclotomic number is not rational");
    }
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::promote(int target) const
{
    check_order(target);
    if (target == order_) {
        return *this;
    }
    if (target % order_ != 0) {
        throw OrderMismatch("cannot promote order " + std::to_string(order_) + " to "
                            + std::to_string(target));
    }
    const std::size_t stride = static_cast<std::size_t>(target / order_);
    std::vector<Rational> c(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * stride + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        c[i * stride] = coeffs_[i];
    }
    return CyclotomicNumber(target, std::move(c));
}

std::complex<double> CyclotomicNumber::to_complex() const
{
    std::complex<double> out{};
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
        out += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero("division by zero in Q(zeta_" + std::to_string(order_) + ")");
    }
    return CyclotomicNumber(order_, detail::inverse_mod(coeffs_, cyclotomic_coeffs(order_)));
}

CyclotomicNumber CyclotomicNumber::pow(long long exponent) const
{
    CyclotomicNumber base = exponent < 0 ? inverse() : *this;
    unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                        : static_cast<unsigned long long>(exponent);
    CyclotomicNumber out(Rational(1), order_);
    while (e != 0) {
        if (e & 1U) {
            out *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

namespace {

int common_order(int a, int b)
{
    return std::lcm(a, b);
}

} // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs)
{
    const int k = common_order(order_, rhs.order_);
    if (k != order_) {
        *this = promote(k);
    }
    const CyclotomicNumber& b = rhs.order_ == k ? rhs : rhs.promote(k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += b.coeffs_[i];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs)
{
    return *this += -rhs;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs)
{
    const int k = common_order(order_, rhs.order_);
    const CyclotomicNumber b = rhs.order_ == k ? rhs : rhs.promote(k);
    const CyclotomicNumber a = order_ == k ? *this : promote(k);
    if (a.is_rational()) {
        *this = b;
        *this *= a.coeffs_[0];
        return *this;
    }
    if (b.is_rational()) {
        *this = a;
        *this *= b.coeffs_[0];
        return *this;
    }
    *this = CyclotomicNumber(k, detail::mul(a.coeffs_, b.coeffs_));
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs)
{
    if (rhs.is_rational()) {
        if (rhs.coeffs_[0] == 0) {
            throw DivisionByZero("division by zero in Q(zeta_" + std::to_string(rhs.order_) + ")");
        }
        const int k = common_order(order_, rhs.order_);
        if (k != order_) {
            *this = promote(k);
        }
        *this *= Rational(1 / rhs.coeffs_[0]);
        return *this;
    }
    return *this *= rhs.inverse();
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& rhs)
{
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.order_ == b.order_) {
        return a.coeffs_ == b.coeffs_;
    }
    const int k = std::lcm(a.order_, b.order_);
    return a.promote(k).coeffs_ == b.promote(k).coeffs_;
}

CyclotomicNumber cyc_arith(const CyclotomicNumber& a, const CyclotomicNumber& b, CycOp op)
{
    if (a.order() != b.order()) {
        throw OrderMismatch("operands have orders " + std::to_string(a.order()) + " and "
                            + std::to_string(b.order()));
    }
    switch (op) {
    case CycOp::add:
        return a + b;
    case CycOp::sub:
        return a - b;
    case CycOp::mul:
        return a * b;
    case CycOp::div:
        return a / b;
    }
    throw DomainError("unknown cyclotomic operation");
}

CyclotomicNumber cyc_root(int k, long long t)
{
    return CyclotomicNumber::root(k, t);
}

} // namespace twistsum
