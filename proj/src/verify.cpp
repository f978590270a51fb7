#include "twistsum/verify.hpp"

#include "qpoly.hpp"
#include "twistsum/errors.hpp"
#include "twistsum/euler_maclaurin.hpp"
#include "twistsum/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace twistsum {

std::optional<Suite> parse_suite(const std::string& name)
{
    for (Suite s : {Suite::powersum, Suite::euler, Suite::cvalues, Suite::em, Suite::zeta, Suite::all}) {
        if (suite_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::string suite_name(Suite suite)
{
    switch (suite) {
    case Suite::powersum: return "powersum";
    case Suite::euler: return "euler";
    case Suite::cvalues: return "cvalues";
    case Suite::em: return "em";
    case Suite::zeta: return "zeta";
    case Suite::all: return "all";
    }
    return "?";
}

std::size_t VerifyReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(properties.begin(), properties.end(), [](const auto& p) { return !p.passed(); }));
}

std::pair<TwistSpec, WeightVector> random_twist_and_weights(std::mt19937_64& gen, const std::vector<int>& moduli,
                                                            std::size_t r, long long max_weight)
{
    const int k = moduli[static_cast<std::size_t>(draw(gen, 0, static_cast<long long>(moduli.size()) - 1))];
    const TwistSpec twist(k, draw(gen, 1, k - 1));
    std::vector<long long> a;
    while (a.size() < r) {
        const long long w = draw(gen, 1, max_weight);
        if ((twist.t() * w) % k != 0) {
            a.push_back(w);
        }
    }
    return {twist, WeightVector(a)};
}

SumSpec random_sum_spec(std::mt19937_64& gen)
{
    const auto r = static_cast<std::size_t>(draw(gen, 1, 3));
    auto [twist, weights] = random_twist_and_weights(gen, {2, 3, 4, 6}, r, 5);
    std::vector<long long> limits;
    for (std::size_t i = 0; i < r; ++i) {
        limits.push_back(draw(gen, 0, 8));
    }
    static const Rational shifts[] = {Rational(0), Rational(1), Rational(5, 2)};
    const Rational x = shifts[draw(gen, 0, 2)];
    const auto s = static_cast<unsigned>(draw(gen, 0, 6));
    return SumSpec(weights, limits, x, s, twist);
}

namespace {

std::string join(const std::vector<long long>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out;
}

} // namespace

std::string describe(const TwistSpec& twist, const WeightVector& weights)
{
    return "k=" + std::to_string(twist.k()) + " t=" + std::to_string(twist.t()) + " A=(" + join(weights.entries()) + ")";
}

std::string describe(const SumSpec& spec)
{
    return describe(spec.twist, spec.weights) + " N=(" + join(spec.limits) + ") x=" + to_string(spec.x)
           + " s=" + std::to_string(spec.s);
}

namespace {

// Collects one property: run `check` on each instance, keep the first counterexample.
class Property {
public:
    Property(std::string suite, std::string name) : result_{std::move(suite), std::move(name), 0, 0, {}} {}

    void record(bool ok, const std::function<std::string()>& what)
    {
        ++result_.checked;
        if (!ok) {
            if (result_.failed++ == 0) {
                result_.counterexample = what();
            }
        }
    }

    void guard(const std::function<bool()>& body, const std::function<std::string()>& what)
    {
        bool ok = false;
        std::string error;
        try {
            ok = body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        record(ok, [&] { return error.empty() ? what() : what() + ": " + error; });
    }

    PropertyResult done() { return std::move(result_); }

private:
    PropertyResult result_;
};

// Dirichlet eta by the Borwein alternating-series algorithm.
Complex eta_borwein(Complex s, int n = 40)
{
    std::vector<double> d(static_cast<std::size_t>(n) + 1);
    double term = 1.0 / n; // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0, divided by n
    double acc = term;
    d[0] = n * acc;
    for (int i = 1; i <= n; ++i) {
        term *= static_cast<double>(n + i - 1) * (n - i + 1) * 4.0 / ((2.0 * i - 1.0) * (2.0 * i));
        acc += term;
        d[static_cast<std::size_t>(i)] = n * acc;
    }
    Complex sum{};
    for (int k = 0; k < n; ++k) {
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        sum += sign * (d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(n)]) * std::exp(-s * std::log(k + 1.0));
    }
    return -sum / d[static_cast<std::size_t>(n)];
}

void powersum_suite(std::mt19937_64& gen, std::vector<PropertyResult>& out)
{
    Property oracle("powersum", "closed form equals lattice enumeration");
    Property corollary("powersum", "closed form at N = 0 equals x^s");
    Property corollary_sum("powersum", "signed corner sum equals 2^r x^m");
    Property permute("powersum", "joint permutation of (A, N) leaves both sums unchanged");
    Property slice("powersum", "dropping n_1 by one removes exactly the n_1 face");
    for (int i = 0; i < 200; ++i) {
        const SumSpec spec = random_sum_spec(gen);
        oracle.guard([&] { return closed_sum(spec) == brute_sum(spec); }, [&] { return describe(spec); });
        const SumSpec origin(spec.weights, std::vector<long long>(spec.weights.size(), 0), spec.x, spec.s, spec.twist);
        corollary.guard([&] { return closed_sum(origin) == CyclotomicNumber(pow(spec.x, spec.s), spec.twist.k()); },
                        [&] { return describe(origin); });
        corollary_sum.guard([&] { return corollary_check(spec.x, spec.s, spec.twist, spec.weights); },
                            [&] { return describe(spec); });
        if (spec.weights.size() > 1) {
            auto a = spec.weights.entries();
            auto n = spec.limits;
            std::rotate(a.begin(), a.begin() + 1, a.end());
            std::rotate(n.begin(), n.begin() + 1, n.end());
            const SumSpec rotated(WeightVector(a), n, spec.x, spec.s, spec.twist);
            permute.guard([&] { return closed_sum(rotated) == closed_sum(spec) && brute_sum(rotated) == brute_sum(spec); },
                          [&] { return describe(spec); });
        }
        if (spec.limits[0] > 0) {
            auto shorter = spec.limits;
            --shorter[0];
            const SumSpec smaller(spec.weights, shorter, spec.x, spec.s, spec.twist);
            // the face m_1 = n_1 is a sum over the other axes with x shifted by a_1 n_1
            CyclotomicNumber face(spec.twist.k());
            if (spec.weights.size() == 1) {
                const Rational y = spec.x + to_rational(spec.weights[0] * spec.limits[0]);
                face = spec.twist.factor(spec.weights[0] * spec.limits[0]) * pow(y, spec.s);
            } else {
                std::vector<long long> rest_a(spec.weights.entries().begin() + 1, spec.weights.entries().end());
                std::vector<long long> rest_n(spec.limits.begin() + 1, spec.limits.end());
                const SumSpec rest(WeightVector(rest_a), rest_n, spec.x + to_rational(spec.weights[0] * spec.limits[0]),
                                   spec.s, spec.twist);
                face = spec.twist.factor(spec.weights[0] * spec.limits[0]) * brute_sum(rest);
            }
            slice.guard([&] { return closed_sum(spec) - closed_sum(smaller) == face; }, [&] { return describe(spec); });
        }
    }
    for (auto* p : {&oracle, &corollary, &corollary_sum, &permute, &slice}) {
        out.push_back(p->done());
    }
}

// E_n(x) = 2/(n+1) [B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)].
PolynomialX euler_from_bernoulli(std::size_t n)
{
    const PolynomialX b = bernoulli_poly(n + 1);
    PolynomialX halved;
    Rational scale = pow(Rational(2), static_cast<unsigned>(n + 1));
    std::vector<Rational> c;
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
        c.push_back(b.coeffs()[i].rational() * scale);
        scale /= 2;
    }
    return (b - PolynomialX::from_rationals(c)) * ratio(2, static_cast<long>(n + 1));
}

void euler_suite(std::mt19937_64& gen, std::vector<PropertyResult>& out)
{
    Property classical("euler", "alternating case equals classical Euler polynomials (m <= 12)");
    for (std::size_t m = 0; m <= 12; ++m) {
        classical.guard([&] {
            const auto e = gen_euler_poly(m, TwistSpec::alternating(), WeightVector{1});
            return e == euler_from_bernoulli(m) && e == classical_euler_poly(m);
        }, [&] { return "m=" + std::to_string(m); });
    }
    out.push_back(classical.done());

    Property bern("euler", "Bernoulli recurrence through B_20 and B_12 = -691/2730");
    const auto b = bernoulli_numbers(20);
    bern.record(b[12] == Rational(-691, 2730), [] { return std::string("B_12"); });
    for (unsigned n = 1; n <= 20; ++n) {
        Rational acc = 0;
        for (unsigned j = 0; j < n + 1; ++j) {
            acc += binomial(n + 1, j) * b[j];
        }
        bern.record(acc == 0, [n] { return "n=" + std::to_string(n); });
    }
    out.push_back(bern.done());

    Property conv("euler", "series expansion equals single-weight convolution");
    Property part("euler", "weight partition reproduces E_m by multinomial convolution");
    for (int i = 0; i < 50; ++i) {
        const auto r = static_cast<std::size_t>(draw(gen, 1, 3));
        auto [twist, weights] = random_twist_and_weights(gen, {2, 3, 4, 5, 6}, r, 6);
        const auto m = static_cast<std::size_t>(draw(gen, 0, 10));
        conv.guard([&] {
            return gen_euler_numbers(m, twist, weights) == gen_euler_numbers_by_convolution(m, twist, weights);
        }, [&] { return describe(twist, weights) + " m=" + std::to_string(m); });
        if (r >= 2) {
            std::vector<WeightVector> parts{WeightVector{weights[0]},
                                            WeightVector(std::vector<long long>(weights.entries().begin() + 1,
                                                                                weights.entries().end()))};
            const std::vector<Rational> xs{Rational(1, 3), Rational(2)};
            const auto mm = std::min<std::size_t>(m, 6);
            part.guard([&] { return gen_euler_poly_partition_check(mm, twist, weights, parts, xs); },
                       [&] { return describe(twist, weights) + " m=" + std::to_string(mm); });
        }
    }
    out.push_back(conv.done());
    out.push_back(part.done());

    Property inv("euler", "truncated series times its inverse is 1");
    for (int i = 0; i < 30; ++i) {
        const int k = static_cast<int>(draw(gen, 1, 8));
        const std::size_t T = static_cast<std::size_t>(draw(gen, 0, 8));
        TruncatedSeries a(T, k);
        for (std::size_t n = 0; n <= T; ++n) {
            CyclotomicNumber c(k);
            for (int e = 0; e < k; ++e) {
                c += CyclotomicNumber::root(k, e) * ratio(draw(gen, -3, 3), draw(gen, 1, 4));
            }
            if (n == 0 && c.is_zero()) {
                c = CyclotomicNumber(Rational(1), k);
            }
            a.set_coeff(n, PolynomialX(c));
        }
        inv.guard([&] { return a * a.inverse() == TruncatedSeries::constant(T, CyclotomicNumber(Rational(1), k)); },
                  [&] { return "k=" + std::to_string(k) + " T=" + std::to_string(T); });
    }
    out.push_back(inv.done());
}

CyclotomicNumber random_cyclotomic(std::mt19937_64& gen, int k)
{
    std::vector<Rational> c;
    for (int i = 0; i < totient(k); ++i) {
        c.push_back(ratio(draw(gen, -5, 5), draw(gen, 1, 6)));
    }
    return CyclotomicNumber(k, c);
}

void cvalues_suite(std::mt19937_64& gen, const Tolerance& tol, std::vector<PropertyResult>& out)
{
    Property field("cvalues", "field axioms in Q(zeta_k), k <= 12");
    Property embed("cvalues", "complex embedding is a ring homomorphism to 1e-10");
    for (int i = 0; i < 120; ++i) {
        const int k = static_cast<int>(draw(gen, 1, 12));
        const auto a = random_cyclotomic(gen, k);
        const auto b = random_cyclotomic(gen, k);
        const auto c = random_cyclotomic(gen, k);
        field.guard([&] {
            bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c
                      && a * b == b * a;
            if (!a.is_zero()) {
                ok = ok && a * a.inverse() == CyclotomicNumber(Rational(1), k);
            }
            return ok;
        }, [&] { return "k=" + std::to_string(k); });
        embed.guard([&] {
            return std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-10
                   && std::abs((a + c).to_complex() - a.to_complex() - c.to_complex()) < 1e-10;
        }, [&] { return "k=" + std::to_string(k); });
    }
    out.push_back(field.done());
    out.push_back(embed.done());

    Property phi("cvalues", "Phi_k divides x^k - 1 for k <= 30");
    for (int k = 1; k <= 30; ++k) {
        phi.guard([&] {
            detail::QPoly xk(static_cast<std::size_t>(k) + 1);
            xk[0] = -1;
            xk[static_cast<std::size_t>(k)] = 1;
            const auto [q, rem] = detail::divmod(xk, cyclotomic_coeffs(k));
            return rem.empty() && static_cast<int>(cyclotomic_coeffs(k).size()) - 1 == totient(k);
        }, [k] { return "k=" + std::to_string(k); });
    }
    out.push_back(phi.done());

    Property gf("cvalues", "C_{n,k}(x; a) matches its generating function (n <= 8)");
    Property window("cvalues", "periodic C agrees with the polynomial on [(k-1)/k, 1) and has period 1");
    for (int k = 2; k <= 6; ++k) {
        for (long long a = 1; a < k; ++a) {
            gf.guard([&] { return c_poly_gf_check(8, k, a); }, [&] { return "k=" + std::to_string(k) + " a=" + std::to_string(a); });
            for (unsigned n = 0; n <= 5; ++n) {
                const Rational x = Rational(k - 1, k) + Rational(1, 2 * k * k);
                window.guard([&] {
                    const CPolySpec spec(n, k, a);
                    return c_tilde(spec, x) == c_poly(spec)(x) && c_tilde(spec, x + 3) == c_tilde(spec, x)
                           && tol.close(c_tilde(spec, to_double(x)), c_poly(spec)(x).to_complex());
                }, [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " a=" + std::to_string(a); });
            }
        }
    }
    out.push_back(gf.done());
    out.push_back(window.done());

    Property star("cvalues", "starred constants match their product generating functions");
    for (int i = 0; i < 20; ++i) {
        const auto r = static_cast<std::size_t>(draw(gen, 1, 3));
        auto [twist, weights] = random_twist_and_weights(gen, {2, 3, 4}, r, 5);
        // the starred constants carry the twist a_i itself
        std::vector<long long> a;
        for (long long w : weights.entries()) {
            if (w % twist.k() != 0) {
                a.push_back(w);
            }
        }
        if (a.empty()) {
            continue;
        }
        const WeightVector A(a);
        star.guard([&] {
            return c_star_multi_gf_check(6, twist.k(), A, ConstantKind::periodic)
                   && c_star_multi_gf_check(6, twist.k(), A, ConstantKind::polynomial);
        }, [&] { return describe(twist, A); });
    }
    out.push_back(star.done());
}

std::vector<double> random_poly(std::mt19937_64& gen, unsigned degree)
{
    std::vector<double> c;
    for (unsigned i = 0; i <= degree; ++i) {
        c.push_back(static_cast<double>(draw(gen, -2, 2)));
    }
    if (c.back() == 0.0) {
        c.back() = 1.0;
    }
    return c;
}

std::string em_case(unsigned d, int k, long long a, long long m, long long n)
{
    return "deg=" + std::to_string(d) + " k=" + std::to_string(k) + " a=" + std::to_string(a) + " [" + std::to_string(m)
           + "," + std::to_string(n) + "]";
}

void em_suite(std::mt19937_64& gen, const Tolerance& tol, std::vector<PropertyResult>& out)
{
    Property exact("em", "polynomial exactness within 1e-10 (deg <= 6, k in {2,3,4}, ranges in [-3,5])");
    Property scaled("em", "scaled form equals the unit form under f(x) = g(kx)");
    for (unsigned d = 0; d <= 6; ++d) {
        for (int k = 2; k <= 4; ++k) {
            for (long long a = 1; a < k; ++a) {
                const auto coeffs = random_poly(gen, d);
                const auto f = SmoothFunction::polynomial(coeffs, d + 1);
                for (long long m = -3; m <= 5; ++m) {
                    for (long long n = m + 1; n <= 5; ++n) {
                        exact.guard([&] { return em_sum_unit(f, m, n, k, a, d + 1).abs_error < 1e-10; },
                                    [&] { return em_case(d, k, a, m, n); });
                    }
                }
                // f(x) = g(kx) has coefficients c_i k^i
                std::vector<double> fc = coeffs;
                for (std::size_t i = 0; i < fc.size(); ++i) {
                    fc[i] *= std::pow(static_cast<double>(k), static_cast<double>(i));
                }
                const auto fk = SmoothFunction::polynomial(fc, d + 1);
                scaled.guard([&] {
                    const auto s = em_sum_scaled(f, -1, 2, k, a, d + 1);
                    const auto u = em_sum_unit(fk, -1, 2, k, a, d + 1);
                    return tol.close(s.total, u.total) && tol.close(s.direct, u.direct) && s.abs_error < 1e-8;
                }, [&] { return em_case(d, k, a, -1, 2); });
            }
        }
    }
    out.push_back(exact.done());
    out.push_back(scaled.done());

    Property stable("em", "total is independent of q for exponentials");
    Property cancel("em", "constants cancel over whole periods");
    Property deriv("em", "preset derivatives pass the finite-difference check");
    for (int i = 0; i < 12; ++i) {
        const Complex alpha(static_cast<double>(draw(gen, -5, 5)) / 10.0, static_cast<double>(draw(gen, -5, 5)) / 10.0);
        const int k = static_cast<int>(draw(gen, 2, 5));
        const long long a = draw(gen, 1, k - 1);
        const auto f = SmoothFunction::exponential(alpha, 8);
        const auto first = em_sum_unit(f, -2, 3, k, a, 1).total;
        std::string label = "alpha=" + std::to_string(alpha.real()) + "+" + std::to_string(alpha.imag()) + "i k="
                            + std::to_string(k) + " a=" + std::to_string(a);
        for (unsigned q = 2; q <= 8; ++q) {
            stable.guard([&] { return std::abs(em_sum_unit(f, -2, 3, k, a, q).total - first) < 1e-9; },
                         [&] { return label + " q=" + std::to_string(q); });
        }
        deriv.guard([&] { return derivative_check(f, -2, 3, 6, gen()); }, [&] { return label; });
        const auto one = SmoothFunction::polynomial({1.0}, 2);
        const long long m = draw(gen, -3, 0);
        const long long n = m + draw(gen, 1, 5);
        cancel.guard([&] {
            const auto r = em_sum_unit(one, m, n, k, a, 2);
            return std::abs(r.direct) < 1e-12 && std::abs(r.main_terms) < 1e-12 && std::abs(r.remainder) < 1e-12;
        }, [&] { return label; });
    }
    out.push_back(stable.done());
    out.push_back(cancel.done());
    out.push_back(deriv.done());
}

void zeta_suite(std::mt19937_64& gen, const Tolerance& tol, std::vector<PropertyResult>& out)
{
    (void)tol;
    Property eta("zeta", "alternating single-weight case equals 2 eta(s) to 1e-8");
    for (double s : {0.5, 1.0, 2.0, 3.0}) {
        eta.guard([&] {
            const Complex v = zeta_accelerated(ZetaSpec(s, 1.0, TwistSpec::alternating(), WeightVector{1}));
            return std::abs(v - 2.0 * eta_borwein(s)) < 1e-8;
        }, [s] { return "s=" + std::to_string(s); });
    }
    out.push_back(eta.done());

    Property tail("zeta", "blocked partial sums at T and 2T agree within the tail bound");
    Property agree("zeta", "accelerated and direct sums agree in the convergent regime");
    for (int i = 0; i < 8; ++i) {
        auto [twist, weights] = random_twist_and_weights(gen, {2, 3, 4, 6}, 1, 4);
        const double s = 1.0 + static_cast<double>(draw(gen, 0, 4)) / 2.0;
        const double x = 0.5 + static_cast<double>(draw(gen, 0, 4)) / 2.0;
        const ZetaSpec spec(s, x, twist, weights);
        const std::string label = describe(twist, weights) + " s=" + std::to_string(s) + " x=" + std::to_string(x);
        const long long T = 20000;
        tail.guard([&] {
            return std::abs(zeta_direct(spec, T) - zeta_direct(spec, 2 * T)) <= zeta_direct_tail_bound(spec, T) + 1e-12;
        }, [&] { return label; });
        agree.guard([&] {
            return std::abs(zeta_accelerated(spec) - zeta_direct(spec, T)) <= zeta_direct_tail_bound(spec, T) + 1e-8;
        }, [&] { return label; });
    }
    out.push_back(tail.done());
    out.push_back(agree.done());

    Property bridge("zeta", "continuation at s = -m equals E_m(c) to 1e-6 (m <= 4, r <= 2)");
    for (int i = 0; i < 16; ++i) {
        const auto r = static_cast<std::size_t>(draw(gen, 1, 2));
        auto [twist, weights] = random_twist_and_weights(gen, {2, 3, 4}, r, 3);
        const Rational c = ratio(draw(gen, 0, 3), 2);
        for (unsigned m = 0; m <= 4; ++m) {
            bridge.guard([&] { return lemma2_check(m, c, twist, weights).plain_matches; },
                        [&] { return describe(twist, weights) + " m=" + std::to_string(m) + " c=" + to_string(c); });
        }
    }
    out.push_back(bridge.done());

    Property decay("zeta", "asymptotic errors do not increase with scale");
    for (std::size_t r = 1; r <= 2; ++r) {
        for (int k : {2, 3}) {
            for (unsigned q : {1u, 2u}) {
                const WeightVector A = r == 1 ? WeightVector{1} : WeightVector{1, 1};
                const ZetaSpec spec(-0.5, 10.0, TwistSpec(k, 1), A, q);
                decay.guard([&] {
                    return decay_probe(DecayTarget::theorem4, spec, {10, 20, 40, 80}).strictly_decreasing;
                }, [&] { return "vary x " + describe(spec.twist, A) + " q=" + std::to_string(q); });
            }
        }
    }
    decay.guard([&] {
        const ZetaSpec spec(-0.5, 1.0, TwistSpec(4, 1), WeightVector{1, 3});
        return decay_probe(DecayTarget::theorem3, spec, {8, 16, 32}).monotone;
    }, [] { return std::string("vary N k=4 A=(1,3)"); });
    decay.guard([&] {
        const ZetaSpec spec(2.0, 0.0, TwistSpec::alternating(), WeightVector{1}, 2);
        return decay_probe(DecayTarget::theorem3, spec, {20, 40, 80}).monotone;
    }, [] { return std::string("vary N s=2 k=2 A=(1)"); });
    out.push_back(decay.done());
}

} // namespace

VerifyReport run_verify(Suite suite, std::uint64_t seed, const Tolerance& tolerance)
{
    VerifyReport report{seed, {}};
    // one generator per suite, so a suite's instances do not depend on which others run
    auto run = [&](Suite s, auto&& body) {
        if (suite == s || suite == Suite::all) {
            std::mt19937_64 gen(seed + static_cast<std::uint64_t>(s));
            body(gen);
        }
    };
    run(Suite::powersum, [&](auto& gen) { powersum_suite(gen, report.properties); });
    run(Suite::euler, [&](auto& gen) { euler_suite(gen, report.properties); });
    run(Suite::cvalues, [&](auto& gen) { cvalues_suite(gen, tolerance, report.properties); });
    run(Suite::em, [&](auto& gen) { em_suite(gen, tolerance, report.properties); });
    run(Suite::zeta, [&](auto& gen) { zeta_suite(gen, tolerance, report.properties); });
    return report;
}

} // namespace twistsum
