#include "twistsum/euler_maclaurin.hpp"

#include "twistsum/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <random>
#include <string>

namespace twistsum {

SmoothFunction::SmoothFunction(std::vector<Evaluator> derivatives) : d_(std::move(derivatives))
{
    if (d_.empty()) {
        throw DomainError("a smooth function needs at least its value");
    }
}

SmoothFunction SmoothFunction::polynomial(std::vector<double> coeffs, unsigned max_order)
{
    std::vector<Evaluator> d;
    for (unsigned l = 0; l <= max_order; ++l) {
        d.emplace_back([coeffs](double x) {
            double value = 0.0;
            for (std::size_t i = coeffs.size(); i-- > 0;) {
                value = value * x + coeffs[i];
            }
            return Complex(value);
        });
        // differentiate in place
        if (!coeffs.empty()) {
            for (std::size_t i = 1; i < coeffs.size(); ++i) {
                coeffs[i - 1] = coeffs[i] * static_cast<double>(i);
            }
            coeffs.pop_back();
        }
    }
    return SmoothFunction(std::move(d));
}

SmoothFunction SmoothFunction::exponential(Complex alpha, unsigned max_order)
{
    std::vector<Evaluator> d;
    Complex scale = 1.0;
    for (unsigned l = 0; l <= max_order; ++l) {
        d.emplace_back([alpha, scale](double x) { return scale * std::exp(alpha * x); });
        scale *= alpha;
    }
    return SmoothFunction(std::move(d));
}

Complex SmoothFunction::derivative(unsigned order, double x) const
{
    return evaluator(order)(x);
}

const SmoothFunction::Evaluator& SmoothFunction::evaluator(unsigned order) const
{
    if (order >= d_.size()) {
        throw DomainError("derivative of order " + std::to_string(order) + " requested but only "
                          + std::to_string(max_order()) + " supplied");
    }
    return d_[order];
}

bool derivative_check(const SmoothFunction& f, double lo, double hi, unsigned points, std::uint64_t seed, double rtol)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> pick(lo, hi);
    const double h = 1e-4 * std::max(1.0, hi - lo);
    for (unsigned p = 0; p < points; ++p) {
        const double x = pick(gen);
        for (unsigned l = 1; l <= f.max_order(); ++l) {
            const Complex fd = (f.derivative(l - 1, x + h) - f.derivative(l - 1, x - h)) / (2 * h);
            const Complex exact = f.derivative(l, x);
            const double scale = std::max({std::abs(exact), std::abs(f.derivative(l - 1, x)), 1.0});
            if (std::abs(fd - exact) > rtol * scale) {
                return false;
            }
        }
    }
    return true;
}

Complex quad_remainder(unsigned q, int k, long long a, const SmoothFunction::Evaluator& fq, double lo, double hi)
{
    if (hi < lo) {
        throw DomainError("quadrature range is reversed");
    }
    if (hi == lo) {
        return 0.0;
    }
    using rule = boost::math::quadrature::gauss<double, 16>;
    const CTildeKernel kernel(CPolySpec(q, k, a));
    const auto& nodes = rule::abscissa();
    const auto& weights = rule::weights();

    auto cell = [&](double u, double v) {
        const double mid = 0.5 * (u + v);
        const double half = 0.5 * (v - u);
        Complex acc{};
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double dx = half * nodes[i];
            acc += weights[i] * (kernel(mid + dx) * fq(mid + dx) + kernel(mid - dx) * fq(mid - dx));
        }
        return acc * half;
    };

    Complex integral{};
    const long long first = static_cast<long long>(std::floor(lo * k)) + 1;
    const long long last = static_cast<long long>(std::ceil(hi * k)) - 1;
    double left = lo;
    for (long long j = first; j <= last; ++j) {
        const double right = static_cast<double>(j) / k;
        if (right > left) {
            integral += cell(left, right);
            left = right;
        }
    }
    integral += cell(left, hi);

    const double sign = q % 2 == 1 ? 1.0 : -1.0; // (-1)^{q+1}
    return integral * sign / factorial(q).get_d();
}

namespace {

void check_em_args(long long m, long long n, int k, long long a, unsigned q, const SmoothFunction& f)
{
    CPolySpec(1, k, a);
    if (m >= n) {
        throw DomainError("summation range needs m < n");
    }
    if (q == 0) {
        throw DomainError("expansion depth q must be at least 1");
    }
    if (q > f.max_order()) {
        throw DomainError("depth q = " + std::to_string(q) + " needs derivatives the function does not supply (max "
                          + std::to_string(f.max_order()) + ")");
    }
}

// coefficients em_constant(l)(-1)^l/l! times scale^{l-1}, l = 1..q
std::vector<Complex> endpoint_weights(unsigned q, int k, long long a, double scale)
{
    std::vector<Complex> w;
    double power = 1.0;
    for (unsigned l = 1; l <= q; ++l) {
        const double sign = l % 2 == 0 ? 1.0 : -1.0;
        w.push_back(em_constant(l, k, a).to_complex() * sign * power / factorial(l).get_d());
        power *= scale;
    }
    return w;
}

EMResult finish(Complex main_terms, Complex remainder, Complex direct)
{
    EMResult out{main_terms, remainder, main_terms + remainder, direct, 0.0};
    out.abs_error = std::abs(out.total - out.direct);
    return out;
}

} // namespace

EMResult em_sum_unit(const SmoothFunction& f, long long m, long long n, int k, long long a, unsigned q)
{
    check_em_args(m, n, k, a, q, f);
    std::vector<Complex> roots;
    for (int l = 0; l < k; ++l) {
        roots.push_back(CyclotomicNumber::root(k, a * l).to_complex());
    }
    Complex direct{};
    for (long long r = m; r < n; ++r) {
        for (int l = 1; l <= k; ++l) {
            direct += roots[static_cast<std::size_t>(l % k)] * f(static_cast<double>(r) + static_cast<double>(l) / k);
        }
    }
    const auto w = endpoint_weights(q, k, a, 1.0);
    Complex main_terms{};
    for (unsigned l = 1; l <= q; ++l) {
        main_terms += w[l - 1] * (f.derivative(l - 1, static_cast<double>(n)) - f.derivative(l - 1, static_cast<double>(m)));
    }
    const Complex remainder = quad_remainder(q, k, a, f.evaluator(q), static_cast<double>(m), static_cast<double>(n));
    return finish(main_terms, remainder, direct);
}

EMResult em_sum_scaled(const SmoothFunction& g, long long m, long long n, int k, long long a, unsigned q)
{
    check_em_args(m, n, k, a, q, g);
    Complex direct{};
    for (long long r = m * k + 1; r <= n * k; ++r) {
        direct += CyclotomicNumber::root(k, a * r).to_complex() * g(static_cast<double>(r));
    }
    const auto w = endpoint_weights(q, k, a, static_cast<double>(k));
    const double kn = static_cast<double>(k * n);
    const double km = static_cast<double>(k * m);
    Complex main_terms{};
    for (unsigned l = 1; l <= q; ++l) {
        main_terms += w[l - 1] * (g.derivative(l - 1, kn) - g.derivative(l - 1, km));
    }
    const double kq = std::pow(static_cast<double>(k), static_cast<double>(q));
    const auto& gq = g.evaluator(q);
    const Complex remainder = quad_remainder(
        q, k, a, [&gq, k, kq](double x) { return kq * gq(k * x); }, static_cast<double>(m), static_cast<double>(n));
    return finish(main_terms, remainder, direct);
}

} // namespace twistsum
