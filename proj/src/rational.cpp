#include "twistsum/rational.hpp"

#include "twistsum/errors.hpp"

#include <cctype>
#include <string>

namespace twistsum {

Rational ratio(long p, long q)
{
    if (q == 0) {
        throw DivisionByZero("zero denominator");
    }
    Rational out(p, q);
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!is_integer_literal(s)) {
        throw DomainError("not an integer: '" + std::string(s) + "'");
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
            throw DomainError("denominator must be unsigned: '" + std::string(text) + "'");
        }
        Integer den = parse_integer(den_text);
        if (den == 0) {
            throw DivisionByZero("zero denominator: '" + std::string(text) + "'");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view digits = text.substr(dot + 1);
        std::string sign;
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
            sign = whole.front() == '-' ? "-" : "";
            whole.remove_prefix(1);
        }
        if ((whole.empty() && digits.empty()) || (!whole.empty() && !is_integer_literal(whole))
            || (!digits.empty() && !is_integer_literal(digits)) || digits.find_first_of("+-") != std::string_view::npos) {
            throw DomainError("not a decimal: '" + std::string(text) + "'");
        }
        Integer num(sign + "0" + std::string(whole) + std::string(digits), 10);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, digits.size());
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return Rational(parse_integer(text));
}

Integer floor(const Rational& q)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Rational frac(const Rational& q)
{
    return q - Rational(floor(q));
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return out;
}

Rational factorial(unsigned n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return Rational(out);
}

Rational binomial(unsigned n, unsigned k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return Rational(out);
}

double to_double(const Rational& q)
{
    return q.get_d();
}

} // namespace twistsum
