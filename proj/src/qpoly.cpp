#include "qpoly.hpp"

#include "twistsum/errors.hpp"

namespace twistsum::detail {

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

QPoly mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b)
{
    QPoly den = b;
    trim(den);
    if (den.empty()) {
        throw DivisionByZero("polynomial division by zero");
    }
    QPoly rem = a;
    trim(rem);
    if (rem.size() < den.size()) {
        return {QPoly{}, rem};
    }
    QPoly quot(rem.size() - den.size() + 1);
    const Rational& lead = den.back();
    for (std::size_t i = rem.size(); i-- >= den.size();) {
        if (rem[i] == 0) {
            continue;
        }
        Rational c = rem[i] / lead;
        std::size_t shift = i + 1 - den.size();
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) {
            rem[shift + j] -= c * den[j];
        }
    }
    trim(quot);
    trim(rem);
    return {quot, rem};
}

void reduce_monic(QPoly& p, const QPoly& modulus)
{
    const std::size_t deg = modulus.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        if (p[i] == 0) {
            continue;
        }
        Rational c = p[i];
        std::size_t shift = i - deg;
        for (std::size_t j = 0; j <= deg; ++j) {
            p[shift + j] -= c * modulus[j];
        }
    }
    if (p.size() > deg) {
        p.resize(deg);
    }
}

QPoly inverse_mod(const QPoly& a, const QPoly& modulus)
{
    // Extended Euclid tracking only the cofactor of a: r_i = s_i * a (mod modulus).
    QPoly r0 = modulus;
    QPoly r1 = a;
    trim(r1);
    if (r1.empty()) {
        throw DivisionByZero("inverse of zero");
    }
    QPoly s0;
    QPoly s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        QPoly qs = mul(q, s1);
        QPoly s2 = s0;
        if (s2.size() < qs.size()) {
            s2.resize(qs.size());
        }
        for (std::size_t i = 0; i < qs.size(); ++i) {
            s2[i] -= qs[i];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) {
            throw DivisionByZero("element is not invertible modulo the given polynomial");
        }
    }
    Rational c = 1 / r1[0];
    for (auto& v : s1) {
        v *= c;
    }
    reduce_monic(s1, modulus);
    trim(s1);
    return s1;
}

} // namespace twistsum::detail
