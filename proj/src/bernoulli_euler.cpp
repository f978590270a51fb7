#include "twistsum/bernoulli_euler.hpp"

#include "twistsum/errors.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace twistsum {

TwistSpec::TwistSpec(int k, long long t) : k_(k), t_(t)
{
    if (k < 1) {
        throw DomainError("twist modulus k must be >= 1, got " + std::to_string(k));
    }
    t_ %= k_;
    if (t_ < 0) {
        t_ += k_;
    }
}

long long TwistSpec::exponent(long long multiple) const
{
    // t < k and |multiple| stays far below 2^62 / k for every caller.
    long long e = (t_ * (multiple % k_)) % k_;
    return e < 0 ? e + k_ : e;
}

CyclotomicNumber TwistSpec::factor(long long multiple) const
{
    return CyclotomicNumber::root(k_, exponent(multiple));
}

WeightVector::WeightVector(std::vector<long long> entries) : a_(std::move(entries))
{
    if (a_.empty()) {
        throw DomainError("weight vector must have at least one entry");
    }
    for (long long a : a_) {
        if (a < 1) {
            throw DomainError("weights must be positive integers, got " + std::to_string(a));
        }
    }
}

long long WeightVector::sum() const
{
    long long s = 0;
    for (long long a : a_) {
        s += a;
    }
    return s;
}

bool WeightVector::admissible(const TwistSpec& twist) const
{
    return std::none_of(a_.begin(), a_.end(), [&](long long a) { return twist.exponent(a) == 0; });
}

void WeightVector::require_admissible(const TwistSpec& twist) const
{
    for (long long a : a_) {
        if (twist.exponent(a) == 0) {
            throw SingularTwist("singular twist: k=" + std::to_string(twist.k()) + " divides t*a = "
                                + std::to_string(twist.t()) + "*" + std::to_string(a));
        }
    }
}

namespace {

class BernoulliCache {
public:
    std::vector<Rational> get(std::size_t n_max)
    {
        std::lock_guard lock(mutex_);
        if (values_.size() <= n_max) {
            extend(std::max(n_max, 2 * values_.size()));
        }
        return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n_max + 1)};
    }

private:
    void extend(std::size_t n_max)
    {
        // (e^z - 1)/z = sum_n z^n/(n+1)!
        TruncatedSeries s(n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            s.set_coeff(n, PolynomialX(CyclotomicNumber(1 / factorial(static_cast<unsigned>(n + 1)), 1)));
        }
        TruncatedSeries inv = s.inverse();
        std::vector<Rational> out(n_max + 1);
        for (std::size_t n = 0; n <= n_max; ++n) {
            out[n] = inv.coeff(n).coeff(0).rational() * factorial(static_cast<unsigned>(n));
        }
        values_ = std::move(out);
    }

    std::mutex mutex_;
    std::vector<Rational> values_;
};

BernoulliCache& bernoulli_cache()
{
    static BernoulliCache cache;
    return cache;
}

/// prod_l (1 - zeta^{t a_l} e^{a_l z}) through z^T.
TruncatedSeries twisted_denominator(std::size_t truncation, const TwistSpec& twist, const WeightVector& weights)
{
    const int k = twist.k();
    TruncatedSeries prod = TruncatedSeries::constant(truncation, CyclotomicNumber(Rational(1), k));
    for (long long a : weights.entries()) {
        TruncatedSeries factor = series_exp_linear(to_rational(a), truncation, k) * (-twist.factor(a));
        factor += TruncatedSeries::constant(truncation, CyclotomicNumber(Rational(1), k));
        prod *= factor;
    }
    return prod;
}

std::vector<Rational> scaled_factorials(std::size_t n_max)
{
    std::vector<Rational> f(n_max + 1);
    f[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        f[n] = f[n - 1] * static_cast<long>(n);
    }
    return f;
}

} // namespace

std::vector<Rational> bernoulli_numbers(std::size_t n_max)
{
    return bernoulli_cache().get(n_max);
}

Rational bernoulli_number(std::size_t n)
{
    return bernoulli_numbers(n)[n];
}

PolynomialX bernoulli_poly(std::size_t n)
{
    const auto b = bernoulli_numbers(n);
    std::vector<Rational> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        c[j] = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) * b[n - j];
    }
    return PolynomialX::from_rationals(c);
}

Rational periodic_bernoulli(std::size_t n, const Rational& x)
{
    return bernoulli_poly(n)(frac(x)).rational();
}

PolynomialX classical_euler_poly(std::size_t n)
{
    // (e^z + 1)/2, inverted, times e^{xz}
    TruncatedSeries den = series_exp_linear(Rational(1), n);
    den += TruncatedSeries::constant(n, CyclotomicNumber(Rational(1), 1));
    den *= Rational(1, 2);
    TruncatedSeries gf = den.inverse() * series_exp_linear(FormalX{}, n);
    return gf.coeff(n) * factorial(static_cast<unsigned>(n));
}

std::vector<CyclotomicNumber> gen_euler_numbers(std::size_t m_max, const TwistSpec& twist,
                                                const WeightVector& weights)
{
    weights.require_admissible(twist);
    TruncatedSeries gf = twisted_denominator(m_max, twist, weights).inverse();
    gf *= pow(Rational(2), static_cast<unsigned>(weights.size()));
    const auto fact = scaled_factorials(m_max);
    std::vector<CyclotomicNumber> out;
    out.reserve(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m) {
        out.push_back(gf.coeff(m).coeff(0) * fact[m]);
    }
    return out;
}

std::vector<PolynomialX> gen_euler_polys(std::size_t m_max, const TwistSpec& twist, const WeightVector& weights)
{
    weights.require_admissible(twist);
    TruncatedSeries gf = twisted_denominator(m_max, twist, weights).inverse();
    gf *= pow(Rational(2), static_cast<unsigned>(weights.size()));
    gf *= series_exp_linear(FormalX{}, m_max, twist.k());
    const auto fact = scaled_factorials(m_max);
    std::vector<PolynomialX> out;
    out.reserve(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m) {
        out.push_back(gf.coeff(m) * fact[m]);
    }
    return out;
}

PolynomialX gen_euler_poly(std::size_t m, const TwistSpec& twist, const WeightVector& weights)
{
    return gen_euler_polys(m, twist, weights).back();
}

namespace {

/// E_0..E_{m_max} for one weight a: 2/(1 - w e^{az}), w = zeta^{t a}.
std::vector<CyclotomicNumber> single_weight_euler(std::size_t m_max, const TwistSpec& twist, long long a)
{
    const CyclotomicNumber w = twist.factor(a);
    const CyclotomicNumber one(Rational(1), twist.k());
    const CyclotomicNumber inv = (one - w).inverse();
    std::vector<Rational> a_pow(m_max + 1);
    a_pow[0] = 1;
    for (std::size_t i = 1; i <= m_max; ++i) {
        a_pow[i] = a_pow[i - 1] * to_rational(a);
    }
    std::vector<CyclotomicNumber> e;
    e.reserve(m_max + 1);
    e.push_back(inv * Rational(2));
    for (std::size_t n = 1; n <= m_max; ++n) {
        CyclotomicNumber acc(twist.k());
        for (std::size_t l = 0; l < n; ++l) {
            acc += e[l] * Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(l)) * a_pow[n - l]);
        }
        e.push_back(w * acc * inv);
    }
    return e;
}

/// c_n = sum_l binom(n, l) u_l v_{n-l}: the exponential-generating-function product.
template <class T>
std::vector<T> binomial_convolution(const std::vector<T>& u, const std::vector<T>& v, const T& zero)
{
    const std::size_t len = std::min(u.size(), v.size());
    std::vector<T> out(len, zero);
    for (std::size_t n = 0; n < len; ++n) {
        for (std::size_t l = 0; l <= n; ++l) {
            out[n] += u[l] * v[n - l] * binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
        }
    }
    return out;
}

bool same_multiset(std::vector<long long> a, std::vector<long long> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace

std::vector<CyclotomicNumber> gen_euler_numbers_by_convolution(std::size_t m_max, const TwistSpec& twist,
                                                               const WeightVector& weights)
{
    weights.require_admissible(twist);
    std::vector<CyclotomicNumber> acc = single_weight_euler(m_max, twist, weights[0]);
    for (std::size_t i = 1; i < weights.size(); ++i) {
        acc = binomial_convolution(acc, single_weight_euler(m_max, twist, weights[i]), CyclotomicNumber(twist.k()));
    }
    return acc;
}

bool gen_euler_poly_partition_check(std::size_t m, const TwistSpec& twist, const WeightVector& weights,
                                    const std::vector<WeightVector>& parts, const std::vector<Rational>& x_parts)
{
    if (parts.empty() || parts.size() != x_parts.size()) {
        throw DomainError("partition needs one or more parts and one shift per part");
    }
    std::vector<long long> joined;
    for (const auto& p : parts) {
        joined.insert(joined.end(), p.entries().begin(), p.entries().end());
    }
    if (!same_multiset(joined, weights.entries())) {
        throw DomainError("parts do not form a partition of the weight vector");
    }
    Rational x(0);
    for (const auto& xi : x_parts) {
        x += xi;
    }
    const CyclotomicNumber lhs = gen_euler_poly(m, twist, weights)(x);

    const CyclotomicNumber zero(twist.k());
    std::vector<CyclotomicNumber> acc;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto polys = gen_euler_polys(m, twist, parts[i]);
        std::vector<CyclotomicNumber> values;
        values.reserve(polys.size());
        for (const auto& p : polys) {
            values.push_back(p(x_parts[i]));
        }
        acc = i == 0 ? values : binomial_convolution(acc, values, zero);
    }
    return lhs == acc[m];
}

} // namespace twistsum
