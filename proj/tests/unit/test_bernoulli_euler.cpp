#include <doctest.h>

#include "oracles.hpp"
#include "twistsum/bernoulli_euler.hpp"
#include "twistsum/errors.hpp"
#include "twistsum/verify.hpp"

#include <random>

using namespace twistsum;

namespace {

CyclotomicNumber rat(long p, long q, int k = 1)
{
    return CyclotomicNumber(ratio(p, q), k);
}

const TwistSpec alt = TwistSpec::alternating();

} // namespace

TEST_CASE("Bernoulli numbers")
{
    const auto b = bernoulli_numbers(20);
    const auto ref = oracle::bernoulli(20);
    CHECK(b[0] == 1);
    CHECK(b[1] == ratio(-1, 2));
    CHECK(b[12] == ratio(-691, 2730));
    for (std::size_t n = 0; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(b[n] == ref[n]);
        if (n % 2 == 1 && n > 1) {
            CHECK(b[n] == 0);
        }
    }
    CHECK(bernoulli_number(4) == ratio(-1, 30));
}

TEST_CASE("Bernoulli polynomials and their periodic version")
{
    CHECK(bernoulli_poly(0) == PolynomialX::from_rationals({1}));
    CHECK(bernoulli_poly(1) == PolynomialX::from_rationals({ratio(-1, 2), 1}));
    CHECK(bernoulli_poly(2) == PolynomialX::from_rationals({ratio(1, 6), -1, 1}));
    CHECK(periodic_bernoulli(2, ratio(5, 2)) == ratio(-1, 12));
    CHECK(periodic_bernoulli(1, ratio(-1, 2)) == 0);
    CHECK(periodic_bernoulli(3, Rational(7)) == 0);
}

TEST_CASE("classical Euler polynomials")
{
    CHECK(classical_euler_poly(0) == PolynomialX::from_rationals({1}));
    CHECK(classical_euler_poly(1) == PolynomialX::from_rationals({ratio(-1, 2), 1}));
    CHECK(classical_euler_poly(3) == PolynomialX::from_rationals({ratio(1, 4), 0, ratio(-3, 2), 1}));
    const auto ref = oracle::euler_polys(12);
    for (std::size_t m = 0; m <= 12; ++m) {
        CAPTURE(m);
        const auto e = classical_euler_poly(m);
        CHECK(e == ref[m]);
        CHECK(gen_euler_poly(m, alt, WeightVector{1}) == ref[m]);
        if (m <= 10) {
            const auto twice = PolynomialX::monomial(rat(2, 1), m);
            CHECK(e + e.shifted(Rational(1)) == twice);
        }
    }
}

TEST_CASE("generalized Euler numbers and polynomials")
{
    CHECK(gen_euler_numbers(0, alt, WeightVector{1})[0] == rat(1, 1));
    const auto e = gen_euler_numbers(3, alt, WeightVector{1});
    CHECK(e[0] == rat(1, 1));
    CHECK(e[1] == rat(-1, 2));
    CHECK(e[2] == rat(0, 1));
    CHECK(e[3] == rat(1, 4));
    CHECK(gen_euler_numbers(2, alt, WeightVector{1, 3})[2] == rat(3, 2));
    CHECK(gen_euler_poly(2, alt, WeightVector{1, 3}) == PolynomialX::from_rationals({ratio(3, 2), -4, 1}));
    CHECK(gen_euler_poly(1, alt, WeightVector{1}) == PolynomialX::from_rationals({ratio(-1, 2), 1}));

    // E_0 is 2^r / prod (1 - zeta^{t a}), which is 1 only in the alternating single-weight case
    const TwistSpec tw(3, 1);
    const auto e0 = gen_euler_poly(0, tw, WeightVector{1, 2});
    const auto expected = rat(4, 1, 3) / ((rat(1, 1, 3) - cyc_root(3, 1)) * (rat(1, 1, 3) - cyc_root(3, 2)));
    CHECK(e0 == PolynomialX(expected));

    std::mt19937_64 gen(5);
    for (int i = 0; i < 20; ++i) {
        auto [twist, weights] = random_twist_and_weights(gen, {2, 3, 4, 5, 6}, static_cast<std::size_t>(draw(gen, 1, 3)), 5);
        const auto m = static_cast<std::size_t>(draw(gen, 0, 6));
        const auto p = gen_euler_poly(m, twist, weights);
        CHECK(p.degree() == static_cast<int>(m));
        CHECK(p.coeff(m) == gen_euler_numbers(0, twist, weights)[0]);
        CHECK(p(Rational(0)) == gen_euler_numbers(m, twist, weights)[m]);
    }
}

TEST_CASE("convolution path agrees with the series path")
{
    CHECK(gen_euler_numbers_by_convolution(2, alt, WeightVector{1, 3})[2] == rat(3, 2));
    const TwistSpec tw(3, 1);
    CHECK(gen_euler_numbers_by_convolution(1, tw, WeightVector{1, 1})[1]
          == gen_euler_numbers(1, tw, WeightVector{1})[1] * rat(2, 1) * gen_euler_numbers(0, tw, WeightVector{1})[0]);
    std::mt19937_64 gen(17);
    for (int i = 0; i < 50; ++i) {
        auto [twist, weights] = random_twist_and_weights(gen, {2, 3, 4, 5, 6}, static_cast<std::size_t>(draw(gen, 1, 3)), 5);
        const auto m = static_cast<std::size_t>(draw(gen, 0, 10));
        CAPTURE(describe(twist, weights));
        CHECK(gen_euler_numbers(m, twist, weights) == gen_euler_numbers_by_convolution(m, twist, weights));
    }
}

TEST_CASE("partition identity")
{
    CHECK(gen_euler_poly_partition_check(3, alt, WeightVector{1, 3}, {WeightVector{1, 3}}, {Rational(5)}));
    for (std::size_t m = 0; m <= 4; ++m) {
        CHECK(gen_euler_poly_partition_check(m, alt, WeightVector{1, 3}, {WeightVector{1}, WeightVector{3}},
                                             {Rational(2), Rational(3)}));
    }
    for (std::size_t m = 0; m <= 3; ++m) {
        CHECK(gen_euler_poly_partition_check(m, TwistSpec(4, 1), WeightVector{1, 2, 3},
                                             {WeightVector{1, 2}, WeightVector{3}}, {Rational(0), Rational(1)}));
    }
    CHECK_THROWS_AS(gen_euler_poly_partition_check(2, alt, WeightVector{1, 3}, {WeightVector{1}, WeightVector{5}},
                                                   {Rational(0), Rational(0)}),
                    DomainError);
    CHECK_THROWS_AS(gen_euler_poly_partition_check(2, alt, WeightVector{1, 3}, {WeightVector{1}, WeightVector{3}},
                                                   {Rational(0)}),
                    DomainError);
}

TEST_CASE("twist and weight validation")
{
    CHECK(TwistSpec(4, 7).t() == 3);
    CHECK(TwistSpec(4, -1).t() == 3);
    CHECK_THROWS(TwistSpec(0, 1));
    CHECK_THROWS(WeightVector{});
    CHECK_THROWS(WeightVector{1, 0});
    CHECK_THROWS(WeightVector{-2});
    CHECK(!WeightVector{2}.admissible(alt));
    CHECK(WeightVector{2}.admissible(TwistSpec(3, 1)));
    CHECK_THROWS_AS(gen_euler_numbers(2, alt, WeightVector{1, 2}), SingularTwist);
    CHECK_THROWS_WITH_AS(WeightVector{4}.require_admissible(TwistSpec(4, 1)), doctest::Contains("singular twist"),
                         SingularTwist);
}
