#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace twistsum {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational to_rational(long long v)
{
    return Rational(static_cast<long>(v));
}

/// p/q in canonical form; q must be nonzero.
Rational ratio(long p, long q);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or a terminating decimal such as "2.5"; throws DomainError otherwise.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);

/// Fractional part in [0, 1).
Rational frac(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

Rational factorial(unsigned n);

Rational binomial(unsigned n, unsigned k);

double to_double(const Rational& q);

} // namespace twistsum
