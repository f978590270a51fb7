#pragma once

#include "twistsum/rational.hpp"

#include <complex>
#include <memory>
#include <vector>

namespace twistsum {

/// Coefficients of the k-th cyclotomic polynomial, lowest degree first.
/// Results are memoized; the returned reference stays valid for the process lifetime.
const std::vector<Rational>& cyclotomic_coeffs(int k);

/// Euler's totient, computed as deg(Phi_k).
int totient(int k);

/// An element of Q(zeta_k), zeta_k = e^{2 pi i/k}, stored as its residue modulo
/// Phi_k in the power basis 1, zeta, ..., zeta^{phi(k)-1}. The representation is
/// canonical: two numbers of the same order are equal iff their coefficients are.
///
/// Arithmetic operators accept operands of different orders; both are promoted
/// to the lcm of the orders first.
class CyclotomicNumber {
public:
    CyclotomicNumber() : CyclotomicNumber(1) {}
    explicit CyclotomicNumber(int order);
    CyclotomicNumber(const Rational& value, int order);
    /// Arbitrary-length coefficient list in powers of zeta_order; reduced on construction.
    CyclotomicNumber(int order, std::vector<Rational> coeffs);

    /// zeta_order^t.
    static CyclotomicNumber root(int order, long long t);

    int order() const noexcept { return order_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws DomainError unless is_rational().
    Rational rational() const;

    /// Re-expresses the value in Q(zeta_target); target must be a multiple of order().
    CyclotomicNumber promote(int target) const;

    /// Image under zeta_k -> e^{2 pi i/k}.
    std::complex<double> to_complex() const;

    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(long long exponent) const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const Rational& rhs);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& b) { return a *= b; }
    friend CyclotomicNumber operator*(const Rational& b, CyclotomicNumber a) { return a *= b; }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

private:
    int order_;
    std::vector<Rational> coeffs_;
};

enum class CycOp { add, sub, mul, div };

/// Strict-order field operation: throws OrderMismatch when the orders differ
/// and DivisionByZero on division by zero.
CyclotomicNumber cyc_arith(const CyclotomicNumber& a, const CyclotomicNumber& b, CycOp op);

/// zeta_k^t; t is reduced modulo k first.
CyclotomicNumber cyc_root(int k, long long t);

} // namespace twistsum
