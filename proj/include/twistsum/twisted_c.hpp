#pragma once

#include "twistsum/bernoulli_euler.hpp"

#include <complex>
#include <vector>

namespace twistsum {

using Complex = std::complex<double>;

/// Indexes C_{n,k}(x; a): degree n, modulus k >= 2, twist numerator a with k not dividing a.
struct CPolySpec {
    CPolySpec(unsigned n, int k, long long a);

    unsigned n;
    int k;
    long long a;
};

/// sum_{l=0}^{k-1} B_n(x - l/k) zeta_k^{a l}.
PolynomialX c_poly(const CPolySpec& spec);

/// The periodic version sum_l B_n({x - l/k}) zeta_k^{a l}, exactly at rational x.
CyclotomicNumber c_tilde(const CPolySpec& spec, const Rational& x);
/// Same, numerically at a real point.
Complex c_tilde(const CPolySpec& spec, double x);

/// c_tilde at real points with the Bernoulli coefficients and roots tabulated once.
class CTildeKernel {
public:
    explicit CTildeKernel(const CPolySpec& spec);
    Complex operator()(double x) const;

private:
    int k_;
    std::vector<double> bernoulli_;
    std::vector<Complex> roots_;
};

/// The Euler-Maclaurin constant C_{l,k}(a) taken as the periodic value at 0:
/// sum_p B_l({-p/k}) zeta^{a p}. Its exponential generating function is
/// z / (zeta^{-a} e^{z/k} - 1).
CyclotomicNumber em_constant(unsigned l, int k, long long a);

/// em_constant(m, k, a) * a^{m-1}; for m = 0 the factor is the rational 1/a.
CyclotomicNumber c_star(unsigned m, int k, long long a);

/// Multinomial convolution of c_star over the entries of a weight vector.
CyclotomicNumber c_star_multi(unsigned m, int k, const WeightVector& weights);
/// c_star_multi for m = 0..m_max. twist_numerator multiplies every entry's
/// twist (zeta^{t a_i}) while a_i keeps its role as the scale.
std::vector<CyclotomicNumber> c_star_multi_all(unsigned m_max, int k, const WeightVector& weights,
                                               long long twist_numerator = 1);

/// Which one-variable constants feed the starred convolution.
enum class ConstantKind {
    periodic,   ///< em_constant, the periodic value at 0
    polynomial, ///< c_poly evaluated at 0
};

/// Compares the convolution values with the Taylor coefficients of the matching
/// generating function through m_max, exactly. For ConstantKind::polynomial the
/// product is prod_p [z/(e^{a_p z}-1)] [(e^{-a_p z}-1)/(zeta^{a_p} e^{-a_p z/k}-1)];
/// for ConstantKind::periodic it is prod_p z/(zeta^{-a_p} e^{a_p z/k} - 1).
/// Both are expanded in w = z/k so every exponential has an integer rate.
bool c_star_multi_gf_check(unsigned m_max, int k, const WeightVector& weights,
                           ConstantKind kind = ConstantKind::periodic);

/// Checks that c_poly(n, k, a) for n <= n_max matches the Taylor coefficients of
/// (z e^{xz}/(e^z-1)) (e^{-z}-1)/(zeta^a e^{-z/k}-1) as polynomials in x.
bool c_poly_gf_check(unsigned n_max, int k, long long a);

/// Rising factorial s (s+1) ... (s+r-1); (s)_0 = 1.
Complex pochhammer(Complex s, unsigned r);

/// s (s-1) ... (s-j+1) / j!.
Complex general_binomial(Complex s, unsigned j);

/// sum_{j=0}^{m} (-k)^j binom(s, j) C*_j(A) x^{s-j}, principal branch, x > 0.
/// The starred constants are computed once on construction.
class CStarExpansion {
public:
    CStarExpansion(unsigned m, int k, const WeightVector& weights, long long twist_numerator = 1);

    Complex operator()(Complex s, double x) const;
    unsigned depth() const noexcept { return static_cast<unsigned>(constants_.size()) - 1; }
    const std::vector<Complex>& constants() const noexcept { return constants_; }

private:
    int k_;
    std::vector<Complex> constants_;
};

Complex c_star_s(Complex s, unsigned m, int k, double x, const WeightVector& weights);

} // namespace twistsum
