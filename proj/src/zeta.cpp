#include "twistsum/zeta.hpp"

#include "twistsum/errors.hpp"
#include "twistsum/powersum.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace twistsum {

namespace {

Complex unit_root(int k, long long e)
{
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(((e % k) + k) % k) / k;
    return std::polar(1.0, angle);
}

bool is_relatively_close(Complex a, Complex b, double tol)
{
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

// y^{-s} for y >= 0, with 0^0 = 1 and 0^{-s} = 0 for Re s < 0.
Complex inverse_power(double y, Complex s)
{
    if (y > 0.0) {
        return std::exp(-s * std::log(y));
    }
    if (s == Complex{}) {
        return 1.0;
    }
    if (s.real() < 0.0) {
        return 0.0;
    }
    throw DomainError("zero denominator: A.M + x = 0 with Re s >= 0");
}

// One axis of the lattice: terms zeta^{e m} g(m). Blocks of B consecutive indices
// are merged so the block ratio W = zeta^{e B} has the most negative real part.
struct Axis {
    int k;
    long long exponent; // e = t a mod k
    long long weight;
    long long block{1};

    long long period() const { return k / std::gcd(static_cast<long long>(k), exponent); }
};

Axis make_axis(const TwistSpec& twist, long long weight)
{
    Axis axis{twist.k(), twist.exponent(weight), weight};
    double best = 2.0;
    for (long long b = 1; b < axis.period(); ++b) {
        const double re = std::cos(2.0 * std::numbers::pi * static_cast<double>(axis.exponent * b) / axis.k);
        if (re < best - 1e-12) {
            best = re;
            axis.block = b;
        }
    }
    return axis;
}

constexpr std::size_t max_head = 12;
constexpr double noise_factor = 1024.0;

// Iterated Euler transformation of sum_n W^n G(n) on its partial sums:
// S^{(j+1)}_n = (S^{(j)}_{n+1} - W S^{(j)}_n) / (1 - W), read along the diagonal.
Complex euler_transform(const std::function<Complex(long long)>& block_term, int k, long long block_exponent,
                        const AccelOptions& options)
{
    const Complex big_w = unit_root(k, block_exponent);
    const Complex denom = 1.0 - big_w;
    std::vector<Complex> row;
    Complex partial{};
    Complex previous{};
    Complex best{};
    double best_gap = std::numeric_limits<double>::infinity();
    double magnitude = 0.0;
    int quiet = 0;
    for (long long n = 0; n < options.max_terms; ++n) {
        partial += unit_root(k, block_exponent * n) * block_term(n);
        magnitude = std::max(magnitude, std::abs(partial));
        Complex value = partial;
        for (auto& entry : row) {
            const Complex old = entry;
            entry = value;
            value = (value - big_w * old) / denom;
        }
        row.push_back(value);
        // Read a fixed distance from the diagonal once enough partial sums exist:
        // a short head smooths the tail without amplifying growing terms much.
        const std::size_t head = std::min<std::size_t>(static_cast<std::size_t>(n) / 2, max_head);
        value = row[row.size() - 1 - head];
        if (n > 0) {
            const double gap = std::abs(value - previous) / std::max(1.0, std::abs(value));
            if (gap < best_gap) {
                best_gap = gap;
                best = value;
            }
            // growing terms leave a rounding floor proportional to the partial sums
            const double floor = noise_factor * std::numeric_limits<double>::epsilon() * magnitude
                                 / std::max(1.0, std::abs(value));
            quiet = gap <= std::max(options.tolerance, floor) ? quiet + 1 : 0;
            if (quiet >= 2) {
                return value;
            }
        }
        previous = value;
    }
    throw AccelerationFailure("acceleration did not reach tolerance " + std::to_string(options.tolerance)
                                  + " within " + std::to_string(options.max_terms) + " blocks",
                              best, best_gap);
}

Complex accelerate_axes(const std::vector<Axis>& axes, std::size_t d, double y, Complex s, const AccelOptions& options)
{
    if (d == axes.size()) {
        return inverse_power(y, s);
    }
    const Axis& axis = axes[d];
    auto block_term = [&](long long n) {
        Complex acc{};
        for (long long b = 0; b < axis.block; ++b) {
            const long long m = n * axis.block + b;
            acc += unit_root(axis.k, axis.exponent * b)
                   * accelerate_axes(axes, d + 1, y + static_cast<double>(axis.weight * m), s, options);
        }
        return acc;
    };
    return euler_transform(block_term, axis.k, axis.exponent * axis.block, options);
}

Complex direct_axes(const std::vector<Axis>& axes, std::size_t d, double y, Complex s, long long count)
{
    if (d == axes.size()) {
        return inverse_power(y, s);
    }
    const Axis& axis = axes[d];
    Complex acc{};
    for (long long m = 0; m < count; ++m) {
        acc += unit_root(axis.k, axis.exponent * m)
               * direct_axes(axes, d + 1, y + static_cast<double>(axis.weight * m), s, count);
    }
    return acc;
}

std::vector<Axis> axes_of(const ZetaSpec& spec)
{
    std::vector<Axis> axes;
    for (long long a : spec.weights.entries()) {
        axes.push_back(make_axis(spec.twist, a));
    }
    return axes;
}

long long rounded_count(const std::vector<Axis>& axes, long long terms)
{
    long long period = 1;
    for (const auto& axis : axes) {
        period = std::lcm(period, axis.period());
    }
    return ((std::max(terms, 1LL) + period - 1) / period) * period;
}

double two_to(std::size_t r)
{
    return std::ldexp(1.0, static_cast<int>(r));
}

} // namespace

ZetaSpec::ZetaSpec(Complex s_, double x_, TwistSpec twist_, WeightVector weights_, std::optional<unsigned> q_)
    : s(s_), x(x_), twist(twist_), weights(std::move(weights_)), q(1)
{
    if (twist.k() < 2) {
        throw DomainError("the twist modulus must be at least 2");
    }
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("shift x must be a finite nonnegative real");
    }
    weights.require_admissible(twist);
    if (q_) {
        if (*q_ == 0) {
            throw DomainError("expansion depth q must be positive");
        }
        q = *q_;
    } else {
        q = static_cast<unsigned>(std::max(1.0, std::ceil(s.real())));
    }
}

Complex zeta_direct(const ZetaSpec& spec, long long terms_per_axis)
{
    if (!(spec.s.real() > 0.0)) {
        throw DomainError("direct summation needs Re s > 0; use zeta_accelerated for the continuation");
    }
    const auto axes = axes_of(spec);
    return two_to(axes.size()) * direct_axes(axes, 0, spec.x, spec.s, rounded_count(axes, terms_per_axis));
}

double zeta_direct_tail_bound(const ZetaSpec& spec, long long terms_per_axis)
{
    if (spec.weights.size() != 1) {
        throw DomainError("the tail bound is only available for a single weight");
    }
    if (!(spec.s.real() > 0.0)) {
        throw DomainError("tail bound needs Re s > 0");
    }
    const auto axes = axes_of(spec);
    const long long count = rounded_count(axes, terms_per_axis);
    const Complex w = unit_root(axes[0].k, axes[0].exponent);
    const double variation = std::max(1.0, std::abs(spec.s) / spec.s.real())
                             * std::pow(spec.x + static_cast<double>(spec.weights[0] * count), -spec.s.real());
    return 2.0 * 2.0 / std::abs(1.0 - w) * variation;
}

Complex zeta_accelerated(const ZetaSpec& spec, const AccelOptions& options)
{
    const auto axes = axes_of(spec);
    const double scale = two_to(axes.size());
    try {
        return scale * accelerate_axes(axes, 0, spec.x, spec.s, options);
    } catch (const AccelerationFailure& e) {
        throw AccelerationFailure(e.what(), scale * e.best_estimate, e.achieved_tolerance);
    }
}

Lemma2Report lemma2_check(unsigned m, const Rational& c, const TwistSpec& twist, const WeightVector& weights,
                          double tolerance, const AccelOptions& options)
{
    if (c < 0) {
        throw DomainError("shift c must be nonnegative");
    }
    const ZetaSpec spec(Complex(-static_cast<double>(m)), to_double(c), twist, weights);
    Lemma2Report out{m, c, zeta_accelerated(spec, options), gen_euler_poly(m, twist, weights)(c), {}, {}, 0, 0, false, false};
    out.plain = out.exact.to_complex();
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(twist.t()) * to_double(c) / twist.k();
    out.divided = out.plain / std::polar(1.0, angle);
    out.plain_error = std::abs(out.accelerated - out.plain);
    out.divided_error = std::abs(out.accelerated - out.divided);
    out.plain_matches = is_relatively_close(out.accelerated, out.plain, tolerance);
    out.divided_matches = is_relatively_close(out.accelerated, out.divided, tolerance);
    return out;
}

namespace {

void check_asymptotic_domain(const ZetaSpec& spec)
{
    if (!(spec.s.real() > -1.0)) {
        throw DomainError("the expansion needs Re s > -1");
    }
}

Complex prefactor_value(const ZetaSpec& spec, AsymptoticPrefactor prefactor)
{
    const std::size_t r = spec.weights.size();
    const double k = spec.twist.k();
    if (prefactor == AsymptoticPrefactor::continuation) {
        const double sign = r % 2 == 0 ? 1.0 : -1.0;
        return two_to(r) * sign * std::conj(unit_root(spec.twist.k(), spec.twist.t() * spec.weights.sum()))
               / (std::pow(k, static_cast<double>(r)) * pochhammer(spec.s + 1.0, static_cast<unsigned>(r)));
    }
    return two_to(r) / (std::pow(k, static_cast<double>(r - 1)) * pochhammer(spec.s + 2.0, static_cast<unsigned>(r - 1)));
}

} // namespace

Complex zeta_asymptotic(const ZetaSpec& spec, AsymptoticPrefactor prefactor)
{
    check_asymptotic_domain(spec);
    const double y = spec.x - static_cast<double>(spec.weights.sum());
    if (!(y > 0.0)) {
        throw DomainError("branch violation: x - A.1 must be positive, got " + std::to_string(y));
    }
    const CStarExpansion expansion(spec.q, spec.twist.k(), spec.weights, spec.twist.t());
    const double r = static_cast<double>(spec.weights.size());
    return prefactor_value(spec, prefactor) * expansion(spec.s + r, y);
}

Complex finite_sum_asymptotic(const ZetaSpec& spec, const std::vector<long long>& limits,
                              AsymptoticPrefactor prefactor, const AccelOptions& options)
{
    check_asymptotic_domain(spec);
    const std::size_t r = spec.weights.size();
    if (limits.size() != r) {
        throw DomainError("limits has " + std::to_string(limits.size()) + " entries but there are "
                          + std::to_string(r) + " weights");
    }
    if (r > max_closed_rank) {
        throw DomainError("finite-sum expansion limited to r <= " + std::to_string(max_closed_rank));
    }
    const int k = spec.twist.k();
    const long long t = spec.twist.t();
    const CStarExpansion expansion(spec.q, k, spec.weights, t);
    const Complex shifted_s = spec.s + static_cast<double>(r);
    const Complex scale = prefactor_value(spec, prefactor) / two_to(r);
    const double total_weight = static_cast<double>(spec.weights.sum());

    Complex corners{};
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << r); ++mask) {
        long long p = 0;     // A_S . N_S
        long long ones = 0;  // A_S . 1
        for (std::size_t i = 0; i < r; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                p += spec.weights[i] * limits[i];
                ones += spec.weights[i];
            }
        }
        double argument = static_cast<double>(p) + spec.x;
        if (prefactor == AsymptoticPrefactor::continuation) {
            argument += static_cast<double>(ones) - total_weight;
        }
        const double sign = std::popcount(mask) % 2 == 0 ? 1.0 : -1.0;
        corners += sign * unit_root(k, t * (p + ones)) * expansion(shifted_s, argument);
    }
    const ZetaSpec empty(-spec.s, spec.x, spec.twist, spec.weights, spec.q);
    return scale * corners + zeta_accelerated(empty, options) / two_to(r);
}

Complex finite_sum_exact(const ZetaSpec& spec, const std::vector<long long>& limits)
{
    const std::size_t r = spec.weights.size();
    if (limits.size() != r) {
        throw DomainError("limits has " + std::to_string(limits.size()) + " entries but there are "
                          + std::to_string(r) + " weights");
    }
    const int k = spec.twist.k();
    std::vector<long long> m(r, 0);
    long long dot = 0;
    Complex acc{};
    while (true) {
        acc += unit_root(k, spec.twist.t() * dot) * inverse_power(spec.x + static_cast<double>(dot), -spec.s);
        std::size_t axis = 0;
        while (axis < r) {
            if (m[axis] < limits[axis]) {
                ++m[axis];
                dot += spec.weights[axis];
                break;
            }
            dot -= spec.weights[axis] * m[axis];
            m[axis] = 0;
            ++axis;
        }
        if (axis == r) {
            return acc;
        }
    }
}

DecayReport decay_probe(DecayTarget target, const ZetaSpec& spec, const std::vector<double>& scales,
                        AsymptoticPrefactor prefactor, double atol, double rtol, const AccelOptions& options)
{
    if (scales.size() < 3) {
        throw DomainError("a decay probe needs at least three scales");
    }
    for (std::size_t i = 1; i < scales.size(); ++i) {
        if (!(scales[i] > scales[i - 1])) {
            throw DomainError("probe scales must be strictly increasing");
        }
    }
    const std::size_t r = spec.weights.size();
    DecayReport out;
    out.predicted = spec.s.real() - static_cast<double>(spec.q) + 2.0;
    out.leading_bound = spec.s.real() + static_cast<double>(r) - static_cast<double>(spec.q) - 1.0;

    const bool integer_power = spec.s.imag() == 0.0 && spec.s.real() >= 0.0 && std::floor(spec.s.real()) == spec.s.real();
    for (double scale : scales) {
        double error = 0.0;
        if (target == DecayTarget::theorem4) {
            ZetaSpec at(spec.s, scale, spec.twist, spec.weights, spec.q);
            const Complex approx = zeta_asymptotic(at, prefactor);
            const Complex value = zeta_accelerated(ZetaSpec(-spec.s, scale, spec.twist, spec.weights, spec.q), options);
            error = std::abs(approx - value);
        } else {
            const std::vector<long long> limits(r, std::llround(scale));
            const Complex approx = finite_sum_asymptotic(spec, limits, prefactor, options);
            Complex value;
            if (integer_power) {
                value = closed_sum(SumSpec(spec.weights, limits, Rational(spec.x),
                                           static_cast<unsigned>(spec.s.real()), spec.twist))
                            .to_complex();
            } else {
                value = finite_sum_exact(spec, limits);
            }
            error = std::abs(approx - value);
        }
        out.points.emplace_back(scale, error);
    }

    out.strictly_decreasing = true;
    out.monotone = true;
    for (std::size_t i = 1; i < out.points.size(); ++i) {
        const double prev = out.points[i - 1].second;
        const double cur = out.points[i].second;
        out.strictly_decreasing = out.strictly_decreasing && cur < prev;
        out.monotone = out.monotone && cur <= prev + atol + rtol * prev;
    }

    std::vector<std::pair<double, double>> logs;
    bool all_small = true;
    for (const auto& [scale, error] : out.points) {
        all_small = all_small && error <= atol;
        if (error > 0.0) {
            logs.emplace_back(std::log(scale), std::log(error));
        }
    }
    out.exact = all_small || logs.size() < 2;
    out.fitted = std::numeric_limits<double>::quiet_NaN();
    if (!out.exact) {
        double mx = 0, my = 0;
        for (const auto& [lx, ly] : logs) {
            mx += lx;
            my += ly;
        }
        mx /= static_cast<double>(logs.size());
        my /= static_cast<double>(logs.size());
        double sxy = 0, sxx = 0;
        for (const auto& [lx, ly] : logs) {
            sxy += (lx - mx) * (ly - my);
            sxx += (lx - mx) * (lx - mx);
        }
        out.fitted = sxy / sxx;
    }
    return out;
}

} // namespace twistsum
