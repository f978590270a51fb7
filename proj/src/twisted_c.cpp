#include "twistsum/twisted_c.hpp"

#include "twistsum/errors.hpp"

#include <cmath>
#include <string>

namespace twistsum {

namespace {

void require_twist(int k, long long a)
{
    if (k < 2) {
        throw DomainError("modulus k must be >= 2, got " + std::to_string(k));
    }
    if (a % k == 0) {
        throw SingularTwist("k=" + std::to_string(k) + " divides a=" + std::to_string(a));
    }
}

Rational rat(long long v)
{
    return to_rational(v);
}

/// 1 + sum_{n>=1} (rate w)^n / n! minus the constant term, divided by w:
/// the series (e^{rate w} - 1)/w through w^T.
TruncatedSeries exp_minus_one_over_w(const Rational& rate, std::size_t truncation, int order)
{
    TruncatedSeries out(truncation, order);
    Rational term = rate;
    for (std::size_t n = 0; n <= truncation; ++n) {
        out.set_coeff(n, PolynomialX(CyclotomicNumber(term, order)));
        term *= rate;
        term /= static_cast<long>(n + 2);
    }
    return out;
}

TruncatedSeries constant_series(std::size_t truncation, const CyclotomicNumber& c)
{
    return TruncatedSeries::constant(truncation, c);
}

/// c * e^{rate w} - 1.
TruncatedSeries shifted_exp(const CyclotomicNumber& c, const Rational& rate, std::size_t truncation, int order)
{
    TruncatedSeries s = series_exp_linear(rate, truncation, order) * c;
    s -= constant_series(truncation, CyclotomicNumber(Rational(1), order));
    return s;
}

/// Multiplies series coefficient n by n!/k^n, recovering the values whose EGF in z = k w was expanded.
std::vector<CyclotomicNumber> unscale(const TruncatedSeries& s, int k)
{
    std::vector<CyclotomicNumber> out;
    out.reserve(s.truncation() + 1);
    Rational factor(1);
    for (std::size_t n = 0; n <= s.truncation(); ++n) {
        out.push_back(s.coeff(n).coeff(0) * factor);
        factor *= static_cast<long>(n + 1);
        factor /= k;
    }
    return out;
}

template <class T>
std::vector<T> binomial_convolution(const std::vector<T>& u, const std::vector<T>& v, const T& zero)
{
    std::vector<T> out(u.size(), zero);
    for (std::size_t n = 0; n < u.size(); ++n) {
        for (std::size_t l = 0; l <= n; ++l) {
            out[n] += u[l] * v[n - l] * binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
        }
    }
    return out;
}

/// One-variable starred constants for twist numerator twist and scale a.
std::vector<CyclotomicNumber> single_star(unsigned m_max, int k, long long twist, long long a, ConstantKind kind)
{
    std::vector<CyclotomicNumber> out;
    out.reserve(m_max + 1);
    for (unsigned m = 0; m <= m_max; ++m) {
        CyclotomicNumber base = kind == ConstantKind::periodic
                                    ? em_constant(m, k, twist)
                                    : c_poly(CPolySpec(m, k, twist))(Rational(0));
        Rational scale = m == 0 ? Rational(1) / rat(a) : pow(rat(a), m - 1);
        out.push_back(base * scale);
    }
    return out;
}

std::vector<CyclotomicNumber> star_convolution(unsigned m_max, int k, const WeightVector& weights,
                                               long long twist_numerator, ConstantKind kind)
{
    std::vector<CyclotomicNumber> acc;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        require_twist(k, twist_numerator * weights[i]);
        auto single = single_star(m_max, k, twist_numerator * weights[i], weights[i], kind);
        acc = i == 0 ? std::move(single) : binomial_convolution(acc, single, CyclotomicNumber(k));
    }
    return acc;
}

} // namespace

CPolySpec::CPolySpec(unsigned n_, int k_, long long a_) : n(n_), k(k_), a(a_)
{
    require_twist(k, a);
}

PolynomialX c_poly(const CPolySpec& spec)
{
    const PolynomialX b = bernoulli_poly(spec.n);
    PolynomialX out(spec.k);
    for (int l = 0; l < spec.k; ++l) {
        out += b.shifted(ratio(-l, spec.k)) * CyclotomicNumber::root(spec.k, spec.a * l);
    }
    return out;
}

CyclotomicNumber c_tilde(const CPolySpec& spec, const Rational& x)
{
    const PolynomialX b = bernoulli_poly(spec.n);
    CyclotomicNumber out(spec.k);
    for (int l = 0; l < spec.k; ++l) {
        Rational arg = frac(x - ratio(l, spec.k));
        out += CyclotomicNumber::root(spec.k, spec.a * l) * b(arg).rational();
    }
    return out;
}

CTildeKernel::CTildeKernel(const CPolySpec& spec) : k_(spec.k)
{
    const PolynomialX b = bernoulli_poly(spec.n);
    for (const auto& c : b.coeffs()) {
        bernoulli_.push_back(c.rational().get_d());
    }
    for (int l = 0; l < spec.k; ++l) {
        roots_.push_back(CyclotomicNumber::root(spec.k, spec.a * l).to_complex());
    }
}

Complex CTildeKernel::operator()(double x) const
{
    Complex out{};
    for (int l = 0; l < k_; ++l) {
        double arg = x - static_cast<double>(l) / k_;
        arg -= std::floor(arg);
        double value = 0.0;
        for (std::size_t i = bernoulli_.size(); i-- > 0;) {
            value = value * arg + bernoulli_[i];
        }
        out += value * roots_[static_cast<std::size_t>(l)];
    }
    return out;
}

Complex c_tilde(const CPolySpec& spec, double x)
{
    return CTildeKernel(spec)(x);
}

CyclotomicNumber em_constant(unsigned l, int k, long long a)
{
    return c_tilde(CPolySpec(l, k, a), Rational(0));
}

CyclotomicNumber c_star(unsigned m, int k, long long a)
{
    require_twist(k, a);
    return single_star(m, k, a, a, ConstantKind::periodic).back();
}

std::vector<CyclotomicNumber> c_star_multi_all(unsigned m_max, int k, const WeightVector& weights,
                                               long long twist_numerator)
{
    return star_convolution(m_max, k, weights, twist_numerator, ConstantKind::periodic);
}

CyclotomicNumber c_star_multi(unsigned m, int k, const WeightVector& weights)
{
    return c_star_multi_all(m, k, weights).back();
}

bool c_star_multi_gf_check(unsigned m_max, int k, const WeightVector& weights, ConstantKind kind)
{
    const auto convolved = star_convolution(m_max, k, weights, 1, kind);
    TruncatedSeries gf = constant_series(m_max, CyclotomicNumber(Rational(1), k));
    for (long long a : weights.entries()) {
        if (kind == ConstantKind::periodic) {
            // k w / (zeta^{-a} e^{a w} - 1)
            TruncatedSeries den = shifted_exp(CyclotomicNumber::root(k, -a), rat(a), m_max, k);
            gf *= den.inverse() * Rational(k);
            // the factor w is applied below by shifting once per weight
        } else {
            // [k w / (e^{a k w} - 1)] [(e^{-a k w} - 1) / (zeta^a e^{-a w} - 1)]
            TruncatedSeries first = exp_minus_one_over_w(rat(a * k), m_max, k).inverse() * Rational(k);
            TruncatedSeries num = shifted_exp(CyclotomicNumber(Rational(1), k), rat(-a * k), m_max, k);
            TruncatedSeries den = shifted_exp(CyclotomicNumber::root(k, a), rat(-a), m_max, k);
            gf *= first * num * den.inverse();
        }
    }
    if (kind == ConstantKind::periodic) {
        // multiply by w^r
        const std::size_t r = weights.size();
        TruncatedSeries shifted(m_max, k);
        for (std::size_t n = r; n <= m_max; ++n) {
            shifted.set_coeff(n, gf.coeff(n - r));
        }
        gf = shifted;
    }
    return unscale(gf, k) == convolved;
}

bool c_poly_gf_check(unsigned n_max, int k, long long a)
{
    require_twist(k, a);
    // k e^{k x w} / ((e^{k w} - 1)/w) * (e^{-k w} - 1) / (zeta^a e^{-w} - 1)
    TruncatedSeries gf = exp_minus_one_over_w(Rational(k), n_max, k).inverse() * Rational(k);
    gf *= series_exp_linear(FormalX{Rational(k)}, n_max, k);
    gf *= shifted_exp(CyclotomicNumber(Rational(1), k), Rational(-k), n_max, k);
    gf *= shifted_exp(CyclotomicNumber::root(k, a), Rational(-1), n_max, k).inverse();
    Rational factor(1);
    for (unsigned n = 0; n <= n_max; ++n) {
        if (!(gf.coeff(n) * factor == c_poly(CPolySpec(n, k, a)))) {
            return false;
        }
        factor *= static_cast<long>(n + 1);
        factor /= k;
    }
    return true;
}

Complex pochhammer(Complex s, unsigned r)
{
    Complex out(1.0, 0.0);
    for (unsigned i = 0; i < r; ++i) {
        out *= s + static_cast<double>(i);
    }
    return out;
}

Complex general_binomial(Complex s, unsigned j)
{
    Complex out(1.0, 0.0);
    for (unsigned i = 0; i < j; ++i) {
        out *= (s - static_cast<double>(i)) / static_cast<double>(i + 1);
    }
    return out;
}

CStarExpansion::CStarExpansion(unsigned m, int k, const WeightVector& weights, long long twist_numerator) : k_(k)
{
    for (const auto& c : c_star_multi_all(m, k, weights, twist_numerator)) {
        constants_.push_back(c.to_complex());
    }
}

Complex CStarExpansion::operator()(Complex s, double x) const
{
    if (!(x > 0.0)) {
        throw DomainError("starred expansion needs x > 0 for the principal branch, got " + std::to_string(x));
    }
    const double log_x = std::log(x);
    Complex out{};
    double scale = 1.0;
    for (unsigned j = 0; j < constants_.size(); ++j) {
        if (constants_[j] != Complex{}) {
            out += scale * general_binomial(s, j) * constants_[j] * std::exp((s - static_cast<double>(j)) * log_x);
        }
        scale *= -static_cast<double>(k_);
    }
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) {
        throw DomainError("starred expansion overflowed");
    }
    return out;
}

Complex c_star_s(Complex s, unsigned m, int k, double x, const WeightVector& weights)
{
    return CStarExpansion(m, k, weights)(s, x);
}

} // namespace twistsum
