#include "twistsum/powersum.hpp"

#include "twistsum/errors.hpp"

#include <bit>
#include <string>

namespace twistsum {

SumSpec::SumSpec(WeightVector weights_, std::vector<long long> limits_, Rational x_, unsigned s_, TwistSpec twist_)
    : weights(std::move(weights_)), limits(std::move(limits_)), x(std::move(x_)), s(s_), twist(twist_)
{
    if (limits.size() != weights.size()) {
        throw DomainError("limits has " + std::to_string(limits.size()) + " entries but there are "
                          + std::to_string(weights.size()) + " weights");
    }
    for (long long n : limits) {
        if (n < 0) {
            throw DomainError("limits must be nonnegative, got " + std::to_string(n));
        }
    }
    if (x < 0) {
        throw DomainError("shift x must be nonnegative, got " + to_string(x));
    }
    weights.require_admissible(twist);
}

CyclotomicNumber brute_sum(const SumSpec& spec)
{
    const int k = spec.twist.k();
    const std::size_t r = spec.weights.size();
    // Group terms by the residue of A.M modulo k so only k cyclotomic products remain.
    std::vector<Rational> bucket(static_cast<std::size_t>(k));
    std::vector<long long> m(r, 0);
    long long dot = 0;
    while (true) {
        bucket[static_cast<std::size_t>(spec.twist.exponent(dot))] += pow(spec.x + to_rational(dot), spec.s);
        std::size_t axis = 0;
        while (axis < r) {
            if (m[axis] < spec.limits[axis]) {
                ++m[axis];
                dot += spec.weights[axis];
                break;
            }
            dot -= spec.weights[axis] * m[axis];
            m[axis] = 0;
            ++axis;
        }
        if (axis == r) {
            break;
        }
    }
    CyclotomicNumber out(k);
    for (int e = 0; e < k; ++e) {
        if (bucket[static_cast<std::size_t>(e)] != 0) {
            out += CyclotomicNumber::root(k, e) * bucket[static_cast<std::size_t>(e)];
        }
    }
    return out;
}

ClosedSum closed_sum_traced(const SumSpec& spec)
{
    const std::size_t r = spec.weights.size();
    if (r > max_closed_rank) {
        throw DomainError("closed form limited to r <= " + std::to_string(max_closed_rank));
    }
    const PolynomialX euler = gen_euler_poly(spec.s, spec.twist, spec.weights);
    const Rational inv_scale = 1 / pow(Rational(2), static_cast<unsigned>(r));
    ClosedSum out{CyclotomicNumber(spec.twist.k()), {}};
    out.terms.reserve(std::size_t{1} << r);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
        long long corner = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                corner += spec.weights[i] * (spec.limits[i] + 1);
            }
        }
        SubsetTerm term{mask,
                        std::popcount(mask) % 2 == 0 ? 1 : -1,
                        spec.twist.exponent(corner),
                        spec.x + to_rational(corner),
                        CyclotomicNumber(spec.twist.k()),
                        CyclotomicNumber(spec.twist.k())};
        term.euler_value = euler(term.argument);
        term.contribution = CyclotomicNumber::root(spec.twist.k(), term.twist_exponent) * term.euler_value
                            * Rational(inv_scale * term.sign);
        out.value += term.contribution;
        out.terms.push_back(std::move(term));
    }
    return out;
}

CyclotomicNumber closed_sum(const SumSpec& spec)
{
    return closed_sum_traced(spec).value;
}

bool corollary_check(const Rational& x, unsigned m, const TwistSpec& twist, const WeightVector& weights)
{
    weights.require_admissible(twist);
    const std::size_t r = weights.size();
    if (r > max_closed_rank) {
        throw DomainError("corollary check limited to r <= " + std::to_string(max_closed_rank));
    }
    const PolynomialX euler = gen_euler_poly(m, twist, weights);
    CyclotomicNumber lhs(twist.k());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
        long long corner = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                corner += weights[i];
            }
        }
        CyclotomicNumber term = twist.factor(corner) * euler(x + to_rational(corner));
        if (std::popcount(mask) % 2 == 0) {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    const CyclotomicNumber rhs(pow(Rational(2), static_cast<unsigned>(r)) * pow(x, m), twist.k());
    return lhs == rhs;
}

CyclotomicNumber alternating_sum(const WeightVector& weights, const std::vector<long long>& limits,
                                 const Rational& x, unsigned s)
{
    for (long long a : weights.entries()) {
        if (a % 2 == 0) {
            throw SingularTwist("inadmissible: (-1)^" + std::to_string(a)
                                + " = 1 makes the generating factor singular");
        }
    }
    return closed_sum(SumSpec(weights, limits, x, s, TwistSpec::alternating()));
}

} // namespace twistsum
