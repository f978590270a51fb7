#pragma once

#include "twistsum/polynomial.hpp"
#include "twistsum/series.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace twistsum {

/// The twist j = 2 pi i t/k, i.e. the character n -> zeta_k^{t n}. The alternating
/// case j = i pi is k = 2, t = 1. t is stored reduced modulo k.
class TwistSpec {
public:
    TwistSpec(int k, long long t);
    static TwistSpec alternating() { return {2, 1}; }

    int k() const noexcept { return k_; }
    long long t() const noexcept { return t_; }
    /// zeta_k^{t * multiple}.
    CyclotomicNumber factor(long long multiple) const;
    /// Exponent of zeta_k in factor(multiple), reduced to [0, k).
    long long exponent(long long multiple) const;

    friend bool operator==(const TwistSpec&, const TwistSpec&) = default;

private:
    int k_;
    long long t_;
};

/// Positive integer weights a_1..a_r, r >= 1.
class WeightVector {
public:
    WeightVector(std::vector<long long> entries);
    WeightVector(std::initializer_list<long long> entries) : WeightVector(std::vector<long long>(entries)) {}

    std::size_t size() const noexcept { return a_.size(); }
    long long operator[](std::size_t i) const { return a_.at(i); }
    const std::vector<long long>& entries() const noexcept { return a_; }
    long long sum() const;

    /// True iff k does not divide t * a_i for every i, i.e. e^{a_i j} != 1.
    bool admissible(const TwistSpec& twist) const;
    /// Throws SingularTwist when !admissible(twist).
    void require_admissible(const TwistSpec& twist) const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<long long> a_;
};

/// B_0..B_{n_max}, from the inverse of (e^z - 1)/z. Memoized (append-only, thread-safe).
std::vector<Rational> bernoulli_numbers(std::size_t n_max);
Rational bernoulli_number(std::size_t n);

/// B_n(y) = sum_k binom(n, k) B_{n-k} y^k.
PolynomialX bernoulli_poly(std::size_t n);

/// B_n({x}).
Rational periodic_bernoulli(std::size_t n, const Rational& x);

/// E_n(x) from 2 e^{xz}/(e^z + 1).
PolynomialX classical_euler_poly(std::size_t n);

/// E_0..E_{m_max} of 2^r / prod_l (1 - zeta^{t a_l} e^{a_l z}).
std::vector<CyclotomicNumber> gen_euler_numbers(std::size_t m_max, const TwistSpec& twist,
                                                const WeightVector& weights);

/// E_m(x, j; A): m! [z^m] of 2^r e^{xz} / prod_l (1 - zeta^{t a_l} e^{a_l z}).
PolynomialX gen_euler_poly(std::size_t m, const TwistSpec& twist, const WeightVector& weights);

/// E_0(x), ..., E_{m_max}(x) from one series expansion.
std::vector<PolynomialX> gen_euler_polys(std::size_t m_max, const TwistSpec& twist,
                                         const WeightVector& weights);

/// The same numbers as gen_euler_numbers, assembled from the single-weight
/// sequences by multinomial convolution. Each single-weight sequence comes from
/// the recurrence (1 - w) E_n = w sum_{l<n} binom(n, l) a^{n-l} E_l, w = zeta^{t a},
/// so no series inversion is shared with gen_euler_numbers.
std::vector<CyclotomicNumber> gen_euler_numbers_by_convolution(std::size_t m_max, const TwistSpec& twist,
                                                               const WeightVector& weights);

/// Checks E_m(x, j; A) = sum multinom(m; l_1..l_d) prod_i E_{l_i}(x_i, j; A'_i) exactly,
/// where parts is a partition of weights (as a multiset) and x = x_1 + ... + x_d.
/// Throws DomainError for a malformed partition.
bool gen_euler_poly_partition_check(std::size_t m, const TwistSpec& twist, const WeightVector& weights,
                                    const std::vector<WeightVector>& parts,
                                    const std::vector<Rational>& x_parts);

} // namespace twistsum
