#pragma once

#include "twistsum/bernoulli_euler.hpp"

#include <cstdint>
#include <vector>

namespace twistsum {

/// One box sum  sum_{0 <= M <= N} (A.M + x)^s zeta_k^{t A.M}.
struct SumSpec {
    SumSpec(WeightVector weights, std::vector<long long> limits, Rational x, unsigned s, TwistSpec twist);

    WeightVector weights;
    std::vector<long long> limits;
    Rational x;
    unsigned s;
    TwistSpec twist;
};

/// Lattice-point enumeration over the whole box.
CyclotomicNumber brute_sum(const SumSpec& spec);

/// One corner of the inclusion-exclusion: subset S (bit i set iff i in S).
struct SubsetTerm {
    std::uint32_t mask;
    int sign;                   ///< (-1)^{|S|}
    long long twist_exponent;   ///< e with zeta_k^e = zeta^{t A_S.(N_S+1)}
    Rational argument;          ///< A_S.(N_S+1) + x
    CyclotomicNumber euler_value; ///< E_s(argument, j; A)
    CyclotomicNumber contribution; ///< sign * zeta^e * euler_value / 2^r
};

struct ClosedSum {
    CyclotomicNumber value;
    std::vector<SubsetTerm> terms;
};

/// (1/2^r) sum_S (-1)^{|S|} zeta^{t A_S.(N_S+1)} E_s(A_S.(N_S+1) + x, j; A).
CyclotomicNumber closed_sum(const SumSpec& spec);
ClosedSum closed_sum_traced(const SumSpec& spec);

/// sum_S (-1)^{|S|} zeta^{t A_S.1} E_m(A_S.1 + x, j; A) == 2^r x^m, checked exactly.
bool corollary_check(const Rational& x, unsigned m, const TwistSpec& twist, const WeightVector& weights);

/// Twist k = 2, t = 1. Every weight must be odd.
CyclotomicNumber alternating_sum(const WeightVector& weights, const std::vector<long long>& limits,
                                 const Rational& x, unsigned s);

/// Largest r accepted by closed_sum (2^r subsets).
inline constexpr std::size_t max_closed_rank = 20;

} // namespace twistsum
