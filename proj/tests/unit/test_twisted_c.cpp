#include <doctest.h>

#include "oracles.hpp"
#include "twistsum/errors.hpp"
#include "twistsum/twisted_c.hpp"

using namespace twistsum;

namespace {

CyclotomicNumber rat(long p, long q, int k = 1)
{
    return CyclotomicNumber(ratio(p, q), k);
}

// sum_l B_n({x - l/k}) zeta^{al}, from oracle Bernoulli numbers
CyclotomicNumber c_tilde_ref(unsigned n, int k, long long a, const Rational& x)
{
    const auto b = oracle::bernoulli(n);
    CyclotomicNumber acc(k);
    for (int l = 0; l < k; ++l) {
        const Rational y = frac(x - ratio(l, k));
        Rational v = 0;
        for (unsigned j = 0; j <= n; ++j) {
            v += binomial(n, j) * b[n - j] * pow(y, j);
        }
        acc += cyc_root(k, a * l) * v;
    }
    return acc;
}

} // namespace

TEST_CASE("twisted Bernoulli combinations")
{
    CHECK(c_poly(CPolySpec(0, 3, 1)).is_zero());
    // B_1(x) - B_1(x - 1/2) = 1/2
    CHECK(c_poly(CPolySpec(1, 2, 1)) == PolynomialX(rat(1, 2, 2)));
    CHECK(c_poly(CPolySpec(2, 2, 1)) == PolynomialX(2, {rat(-3, 4, 2), rat(1, 1, 2)}));
    CHECK_THROWS_AS(CPolySpec(2, 2, 4), DomainError);
    CHECK_THROWS_AS(CPolySpec(2, 1, 1), DomainError);
}

TEST_CASE("periodic combinations")
{
    const CPolySpec one(1, 2, 1);
    CHECK(c_tilde(one, ratio(1, 4)) == rat(-1, 2, 2));
    CHECK(c_tilde(one, ratio(3, 4)) == rat(1, 2, 2));
    CHECK(c_tilde(CPolySpec(2, 2, 1), Rational(0)) == rat(1, 4, 2));
    for (int k = 2; k <= 5; ++k) {
        for (long long a = 1; a < k; ++a) {
            for (unsigned n = 0; n <= 4; ++n) {
                for (const Rational& x : {Rational(0), ratio(1, 3), ratio(7, 5), ratio(-2, 7)}) {
                    const CPolySpec spec(n, k, a);
                    CHECK(c_tilde(spec, x) == c_tilde_ref(n, k, a, x));
                    CHECK(std::abs(c_tilde(spec, to_double(x) + 1e-13) - c_tilde(spec, x).to_complex()) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("endpoint constants")
{
    CHECK(em_constant(1, 2, 1) == rat(-1, 2, 2));
    CHECK(em_constant(2, 2, 1) == rat(1, 4, 2));
    for (int k = 2; k <= 6; ++k) {
        CHECK(em_constant(0, k, 1).is_zero());
        // closed form of the l = 1 constant: zeta^a / (1 - zeta^a)
        const auto w = cyc_root(k, 1);
        CHECK(em_constant(1, k, 1) == w / (rat(1, 1, k) - w));
    }
    CHECK(c_star(0, 2, 1).is_zero());
    CHECK(c_star(1, 2, 1) == rat(-1, 2, 2));
    CHECK(c_star(2, 2, 3) == rat(3, 4, 2));
}

TEST_CASE("starred convolution")
{
    CHECK(c_star_multi(3, 3, WeightVector{2}) == c_star(3, 3, 2));
    CHECK(c_star_multi(1, 2, WeightVector{1, 1}).is_zero());
    CHECK(c_star_multi(2, 2, WeightVector{1, 1}) == rat(1, 2, 2));
    const auto all = c_star_multi_all(5, 3, WeightVector{1, 2});
    for (unsigned m = 0; m <= 5; ++m) {
        CHECK(all[m] == c_star_multi(m, 3, WeightVector{1, 2}));
    }
    CHECK(all[0].is_zero());
    CHECK(all[1].is_zero());
}

TEST_CASE("generating function checks")
{
    CHECK(c_star_multi_gf_check(4, 2, WeightVector{1}));
    CHECK(c_star_multi_gf_check(4, 3, WeightVector{1, 2}));
    CHECK(c_star_multi_gf_check(6, 4, WeightVector{1, 3, 5}));
    CHECK(c_star_multi_gf_check(4, 2, WeightVector{1}, ConstantKind::polynomial));
    CHECK(c_star_multi_gf_check(4, 3, WeightVector{1, 2}, ConstantKind::polynomial));
    CHECK_THROWS_AS(c_star_multi_gf_check(4, 2, WeightVector{2}), DomainError);
    for (int k = 2; k <= 6; ++k) {
        for (long long a = 1; a < k; ++a) {
            CHECK(c_poly_gf_check(6, k, a));
        }
    }
}

TEST_CASE("Pochhammer and general binomials")
{
    CHECK(pochhammer({2.5, 1.0}, 0) == Complex(1.0));
    CHECK(pochhammer(3.0, 2) == Complex(12.0));
    CHECK(std::abs(pochhammer(-0.5, 3) - Complex(-0.375)) < 1e-15);
    CHECK(general_binomial({0.3, -2.0}, 0) == Complex(1.0));
    CHECK(std::abs(general_binomial(4.0, 2) - Complex(6.0)) < 1e-14);
    CHECK(std::abs(general_binomial(-0.5, 2) - Complex(0.375)) < 1e-15);
}

TEST_CASE("starred expansion")
{
    CHECK(c_star_s({1.7, 0.2}, 0, 2, 3.0, WeightVector{1}) == Complex(0.0));
    CHECK(std::abs(c_star_s(2.0, 2, 2, 10.0, WeightVector{1}) - Complex(21.0)) < 1e-12);
    CHECK(std::abs(c_star_s(-0.5, 1, 2, 4.0, WeightVector{1}) - Complex(-0.0625)) < 1e-15);
    CHECK_THROWS_AS(c_star_s(2.0, 2, 2, 0.0, WeightVector{1}), DomainError);
    CHECK_THROWS_AS(c_star_s(2.0, 2, 2, -1.0, WeightVector{1}), DomainError);
    const CStarExpansion e(4, 3, WeightVector{1, 2});
    CHECK(e.depth() == 4);
    CHECK(e.constants().size() == 5);
}
