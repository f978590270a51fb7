#include <doctest.h>

#include "qpoly.hpp"
#include "twistsum/errors.hpp"
#include "twistsum/series.hpp"
#include "twistsum/verify.hpp"

#include <random>

using namespace twistsum;

namespace {

CyclotomicNumber random_element(std::mt19937_64& gen, int k)
{
    std::vector<Rational> c;
    for (int i = 0; i < totient(k); ++i) {
        c.push_back(ratio(draw(gen, -6, 6), draw(gen, 1, 5)));
    }
    return CyclotomicNumber(k, c);
}

CyclotomicNumber rat(long p, long q, int k = 1)
{
    return CyclotomicNumber(ratio(p, q), k);
}

} // namespace

TEST_CASE("rational parsing and formatting")
{
    CHECK(parse_rational("5/2") == ratio(5, 2));
    CHECK(parse_rational("-6/4") == ratio(-3, 2));
    CHECK(parse_rational("010") == 10);
    CHECK(parse_rational("2.5") == ratio(5, 2));
    CHECK(to_string(ratio(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS_AS(ratio(1, 0), DivisionByZero);
    CHECK(floor(ratio(-1, 2)) == -1);
    CHECK(frac(ratio(-1, 2)) == ratio(1, 2));
    CHECK(binomial(6, 2) == 15);
    CHECK(factorial(5) == 120);
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == PolynomialX::from_rationals({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == PolynomialX::from_rationals({1, 1}));
    CHECK(cyclotomic_polynomial(12) == PolynomialX::from_rationals({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == PolynomialX::from_rationals({1, -1, 1}));
    for (int k = 1; k <= 30; ++k) {
        CAPTURE(k);
        detail::QPoly xk(static_cast<std::size_t>(k) + 1);
        xk[0] = -1;
        xk.back() = 1;
        const auto [q, r] = detail::divmod(xk, cyclotomic_coeffs(k));
        CHECK(r.empty());
        CHECK(totient(k) == static_cast<int>(cyclotomic_coeffs(k).size()) - 1);
    }
}

TEST_CASE("roots of unity")
{
    CHECK(cyc_root(2, 1) == rat(-1, 1, 2));
    CHECK(cyc_root(4, 2) == rat(-1, 1, 4));
    CHECK(cyc_root(3, 1) + cyc_root(3, 2) == rat(-1, 1, 3));
    CHECK(cyc_root(5, 7) == cyc_root(5, 2));
    CHECK(cyc_root(7, -1) == cyc_root(7, 6));
    CHECK(cyc_root(9, 1).pow(9) == rat(1, 1, 9));
    CHECK(std::abs(cyc_root(8, 3).to_complex() - std::polar(1.0, 2 * M_PI * 3 / 8)) < 1e-14);
}

TEST_CASE("strict field operations")
{
    const auto z2 = cyc_root(2, 1);
    CHECK(cyc_arith(z2, z2, CycOp::mul) == rat(1, 1, 2));
    CHECK(cyc_arith(rat(1, 1, 2), cyc_arith(rat(1, 1, 2), z2, CycOp::sub), CycOp::div) == rat(1, 2, 2));
    const auto z3 = cyc_root(3, 1);
    const auto inv = cyc_arith(rat(1, 1, 3), cyc_arith(rat(1, 1, 3), z3, CycOp::sub), CycOp::div);
    CHECK(inv == (rat(2, 1, 3) + z3) * ratio(1, 3));
    CHECK_THROWS_AS(cyc_arith(z2, z3, CycOp::add), OrderMismatch);
    CHECK_THROWS_AS(cyc_arith(z3, CyclotomicNumber(3), CycOp::div), DivisionByZero);
    CHECK_THROWS_AS(CyclotomicNumber(5).inverse(), DivisionByZero);
}

TEST_CASE("mixed orders promote to the lcm")
{
    const auto sum = cyc_root(2, 1) + cyc_root(3, 1);
    CHECK(sum.order() == 6);
    CHECK(std::abs(sum.to_complex() - (-1.0 + std::polar(1.0, 2 * M_PI / 3))) < 1e-14);
    CHECK(cyc_root(4, 1).promote(12) == cyc_root(12, 3));
    CHECK(cyc_root(4, 2) == rat(-1, 1));
}

TEST_CASE("field axioms hold exactly for k <= 12")
{
    std::mt19937_64 gen(11);
    for (int i = 0; i < 150; ++i) {
        const int k = static_cast<int>(draw(gen, 1, 12));
        CAPTURE(k);
        const auto a = random_element(gen, k);
        const auto b = random_element(gen, k);
        const auto c = random_element(gen, k);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == CyclotomicNumber(k));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == rat(1, 1, k));
            CHECK((b / a) * a == b);
        }
        CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-10);
        CHECK(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-10);
    }
}

TEST_CASE("polynomials over the field")
{
    const auto p = PolynomialX::from_rationals({1, -3, 2}); // 2x^2 - 3x + 1
    CHECK(p.degree() == 2);
    CHECK(p(Rational(1)) == rat(0, 1));
    CHECK(p(ratio(1, 2)) == rat(0, 1));
    CHECK(p.derivative() == PolynomialX::from_rationals({-3, 4}));
    CHECK(p.shifted(Rational(1)) == PolynomialX::from_rationals({0, 1, 2}));
    CHECK(PolynomialX(1).degree() == -1);
    CHECK((p * p).degree() == 4);
    CHECK(std::abs(p.evaluate({0.5, 1.0}) - (2.0 * std::complex<double>(0.5, 1) * std::complex<double>(0.5, 1)
                                             - 3.0 * std::complex<double>(0.5, 1) + 1.0)) < 1e-14);
}

TEST_CASE("series products")
{
    TruncatedSeries one_plus(2), one_minus(2);
    one_plus.set_coeff(0, PolynomialX(rat(1, 1)));
    one_plus.set_coeff(1, PolynomialX(rat(1, 1)));
    one_minus.set_coeff(0, PolynomialX(rat(1, 1)));
    one_minus.set_coeff(1, PolynomialX(rat(-1, 1)));
    const auto prod = series_mul(one_plus, one_minus);
    CHECK(prod.coeff(0) == PolynomialX(rat(1, 1)));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == PolynomialX(rat(-1, 1)));

    CHECK(series_exp_linear(Rational(1), 4) * series_exp_linear(Rational(-1), 4)
          == TruncatedSeries::constant(4, rat(1, 1)));
    const auto sq = series_exp_linear(Rational(1), 3) * series_exp_linear(Rational(1), 3);
    CHECK(sq.coeff(2) == PolynomialX(rat(2, 1)));
    CHECK(sq.coeff(3) == PolynomialX(rat(4, 3)));
}

TEST_CASE("series inversion")
{
    TruncatedSeries a(3);
    a.set_coeff(0, PolynomialX(rat(1, 1)));
    a.set_coeff(1, PolynomialX(rat(-1, 1)));
    const auto inv = series_inv(a);
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(inv.coeff(n) == PolynomialX(rat(1, 1)));
    }
    const auto e = series_inv(series_exp_linear(Rational(1), 2));
    CHECK(e.coeff(1) == PolynomialX(rat(-1, 1)));
    CHECK(e.coeff(2) == PolynomialX(rat(1, 2)));

    // (e^z - 1)/z inverted gives the Bernoulli generating function
    TruncatedSeries q(4);
    for (unsigned n = 0; n <= 4; ++n) {
        q.set_coeff(n, PolynomialX(CyclotomicNumber(1 / factorial(n + 1), 1)));
    }
    const auto b = series_inv(q);
    CHECK(b.coeff(4) * factorial(4) == PolynomialX(rat(-1, 30)));

    CHECK_THROWS(series_inv(TruncatedSeries(3)));
    TruncatedSeries poly_const(2);
    poly_const.set_coeff(0, PolynomialX::x());
    CHECK_THROWS(series_inv(poly_const));

    std::mt19937_64 gen(3);
    for (int i = 0; i < 25; ++i) {
        const int k = static_cast<int>(draw(gen, 1, 6));
        const auto T = static_cast<std::size_t>(draw(gen, 0, 7));
        TruncatedSeries s(T, k);
        for (std::size_t n = 0; n <= T; ++n) {
            auto c = random_element(gen, k);
            if (n == 0 && c.is_zero()) {
                c = rat(1, 1, k);
            }
            s.set_coeff(n, PolynomialX(c));
        }
        CHECK(s * s.inverse() == TruncatedSeries::constant(T, rat(1, 1, k)));
    }
}

TEST_CASE("exponential series")
{
    CHECK(series_exp_linear(Rational(0), 3) == TruncatedSeries::constant(3, rat(1, 1)));
    const auto ex = series_exp_linear(FormalX{}, 2);
    CHECK(ex.coeff(1) == PolynomialX::x());
    CHECK(ex.coeff(2) == PolynomialX::from_rationals({0, 0, ratio(1, 2)}));
    const auto e3 = series_exp_linear(Rational(3), 3);
    CHECK(e3.coeff(2) == PolynomialX(rat(9, 2)));
    CHECK(e3.coeff(3) == PolynomialX(rat(9, 2)));
}
