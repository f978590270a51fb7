// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include "oracles.hpp"
#include "twistsum/cli.hpp"
#include "twistsum/euler_maclaurin.hpp"
#include "twistsum/powersum.hpp"
#include "twistsum/serialize.hpp"
#include "twistsum/verify.hpp"
#include "twistsum/zeta.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

using namespace twistsum;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

// Box sum by enumeration, written independently of the library's brute_sum.
CyclotomicNumber enumerate(const SumSpec& spec)
{
    const auto& a = spec.weights.entries();
    const int k = spec.twist.k();
    std::vector<long long> m(a.size(), 0);
    CyclotomicNumber total(Rational(0), k);
    for (;;) {
        long long dot = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            dot += a[i] * m[i];
        }
        const Rational base = to_rational(dot) + spec.x;
        total += cyc_root(k, spec.twist.t() * dot) * pow(base, spec.s);
        std::size_t i = 0;
        while (i < m.size() && m[i] == spec.limits[i]) {
            m[i++] = 0;
        }
        if (i == m.size()) {
            break;
        }
        ++m[i];
    }
    return total;
}

Outcome box_example()
{
    std::ostringstream out;
    std::ostringstream err;
    const auto start = Clock::now();
    const int code = cli::run({"sum", "--weights", "3,1", "--limits", "100,150", "--x", "0", "--s", "2", "--k", "2",
                               "--t", "1", "--method", "both"},
                              out, err);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (code != cli::exit_ok) {
        return {false, "exit code " + std::to_string(code)};
    }
    const Json j = Json::parse(out.str());
    const bool ok = j["closed"] == Json("79275") && j["brute"] == Json("79275") && j["equal"] == true && seconds < 5;
    return {ok, "closed=" + j["closed"].dump() + " brute=" + j["brute"].dump() + " " + std::to_string(seconds) + "s"};
}

Outcome random_closed_vs_enumeration()
{
    std::mt19937_64 gen(20240601);
    const auto start = Clock::now();
    int bad = 0;
    std::string first;
    for (int i = 0; i < 200; ++i) {
        const SumSpec spec = random_sum_spec(gen);
        const auto closed = closed_sum(spec);
        if (closed != enumerate(spec) || closed != brute_sum(spec)) {
            if (bad++ == 0) {
                first = describe(spec);
            }
        }
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return {bad == 0 && seconds < 60,
            std::to_string(200 - bad) + "/200 exact, " + std::to_string(seconds) + "s" + (first.empty() ? "" : ", first " + first)};
}

Outcome origin_box()
{
    std::mt19937_64 gen(20240602);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
        const SumSpec drawn = random_sum_spec(gen);
        const SumSpec spec(drawn.weights, std::vector<long long>(drawn.weights.size(), 0), drawn.x, drawn.s, drawn.twist);
        const CyclotomicNumber expected(pow(spec.x, spec.s), spec.twist.k());
        if (closed_sum(spec) != expected || !corollary_check(spec.x, spec.s, spec.twist, spec.weights)) {
            ++bad;
        }
    }
    return {bad == 0, std::to_string(200 - bad) + "/200 exact"};
}

Outcome classical()
{
    const auto euler = oracle::euler_polys(12);
    const auto bern = oracle::bernoulli(12);
    const auto lib = bernoulli_numbers(12);
    int bad = 0;
    for (std::size_t m = 0; m <= 12; ++m) {
        if (gen_euler_poly(m, TwistSpec(2, 1), WeightVector{1}) != euler[m] || lib[m] != bern[m]) {
            ++bad;
        }
    }
    const bool b12 = lib[12] == ratio(-691, 2730);
    return {bad == 0 && b12, std::to_string(13 - bad) + "/13 degrees exact, B_12 " + (b12 ? "= -691/2730" : "wrong")};
}

Outcome convolution()
{
    std::mt19937_64 gen(20240603);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
        auto [twist, weights] = random_twist_and_weights(gen, {2, 3, 4, 5, 6}, static_cast<std::size_t>(draw(gen, 1, 3)), 5);
        const auto m = static_cast<std::size_t>(draw(gen, 0, 10));
        if (gen_euler_numbers(m, twist, weights) != gen_euler_numbers_by_convolution(m, twist, weights)) {
            ++bad;
        }
    }
    return {bad == 0, std::to_string(50 - bad) + "/50 exact"};
}

Outcome polynomial_exactness()
{
    std::mt19937_64 gen(20240604);
    double worst = 0;
    std::size_t cases = 0;
    for (unsigned d = 0; d <= 6; ++d) {
        std::vector<double> c;
        for (unsigned i = 0; i <= d; ++i) {
            c.push_back(static_cast<double>(draw(gen, -3, 3)));
        }
        c.back() = static_cast<double>(draw(gen, 1, 3));
        const auto f = SmoothFunction::polynomial(c, d + 1);
        for (int k = 2; k <= 4; ++k) {
            for (long long a = 1; a < k; ++a) {
                for (long long m = -3; m < 5; ++m) {
                    for (long long n = m + 1; n <= 5; ++n) {
                        worst = std::max(worst, em_sum_unit(f, m, n, k, a, d + 1).abs_error);
                        ++cases;
                    }
                }
            }
        }
    }
    const auto hand = em_sum_unit(SmoothFunction::polynomial({0, 0, 1}, 2), 0, 1, 2, 1, 2);
    const bool hand_ok = std::abs(hand.direct - 0.75) < 1e-12 && std::abs(hand.total - 0.75) < 1e-12;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu cases, max |total - direct| = %.2e, x^2 case %s", cases, worst,
                  hand_ok ? "3/4 = 3/4" : "wrong");
    return {worst < 1e-10 && hand_ok, buf};
}

Outcome negative_orders()
{
    std::mt19937_64 gen(20240605);
    const std::vector<Rational> cs{Rational(0), ratio(1, 2), Rational(1), ratio(3, 2), Rational(3)};
    double worst = 0;
    int total = 0;
    int bad = 0;
    for (int i = 0; i < 12; ++i) {
        auto [twist, weights] = random_twist_and_weights(gen, {2, 3, 4}, static_cast<std::size_t>(draw(gen, 1, 2)), 4);
        const Rational c = cs[static_cast<std::size_t>(draw(gen, 0, 4))];
        for (unsigned m = 0; m <= 4; ++m) {
            const auto report = lemma2_check(m, c, twist, weights, 1e-6);
            worst = std::max(worst, report.plain_error);
            ++total;
            bad += report.plain_matches ? 0 : 1;
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "%d/%d within 1e-6, max error %.2e", total - bad, total, worst);
    return {bad == 0, buf};
}

double fit_slope(const std::vector<std::pair<double, double>>& pts)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += std::log(x);
        sy += std::log(y);
        sxx += std::log(x) * std::log(x);
        sxy += std::log(x) * std::log(y);
    }
    const double n = static_cast<double>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome x_decay()
{
    struct Case {
        int k;
        WeightVector a;
    };
    const std::vector<Case> cases{{2, WeightVector{1}}, {3, WeightVector{1}}, {2, WeightVector{1, 3}}, {3, WeightVector{1, 2}}};
    bool all = true;
    std::ostringstream detail;
    for (const auto& c : cases) {
        for (unsigned q : {1u, 2u}) {
            const ZetaSpec spec(-0.5, 10.0, TwistSpec(c.k, 1), c.a, q);
            const auto rep = decay_probe(DecayTarget::theorem4, spec, {10, 20, 40, 80});
            const bool slope_ok = rep.predicted >= 0 || std::abs(rep.fitted - rep.predicted) <= 0.3;
            const bool ok = rep.strictly_decreasing && slope_ok;
            all = all && ok;
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "\n    r=%zu k=%d q=%u: errors %.2e %.2e %.2e %.2e, slope %.2f, required %.1f%s, "
                          "first omitted term %.1f -> %s",
                          c.a.size(), c.k, q, rep.points[0].second, rep.points[1].second, rep.points[2].second,
                          rep.points[3].second, rep.fitted, rep.predicted, rep.predicted >= 0 ? " (decrease only)" : "",
                          rep.leading_bound, ok ? "ok" : "fail");
            detail << buf;
            const auto printed = decay_probe(DecayTarget::theorem4, spec, {10, 20, 40, 80},
                                             AsymptoticPrefactor::shifted_pochhammer);
            std::snprintf(buf, sizeof buf, "\n      reduced prefactor: errors %.2e .. %.2e, slope %.2f",
                          printed.points.front().second, printed.points.back().second,
                          fit_slope(printed.points));
            detail << buf;
        }
    }
    return {all, detail.str()};
}

Outcome box_decay()
{
    const ZetaSpec spec(2.0, 0.0, TwistSpec(2, 1), WeightVector{1});
    const auto rep = decay_probe(DecayTarget::theorem3, spec, {20, 40, 80});
    char buf[200];
    std::snprintf(buf, sizeof buf, "errors %.2e %.2e %.2e, %s", rep.points[0].second, rep.points[1].second,
                  rep.points[2].second, rep.exact ? "exact to rounding" : (rep.monotone ? "non-increasing" : "increasing"));
    return {rep.monotone, buf};
}

Outcome eta()
{
    double worst = 0;
    for (double s : {0.5, 1.0, 2.0, 3.0}) {
        const Complex v = zeta_accelerated(ZetaSpec(s, 1.0, TwistSpec(2, 1), WeightVector{1}));
        worst = std::max(worst, std::abs(v - 2.0 * oracle::eta(s)));
    }
    const double pi2 = std::abs(zeta_accelerated(ZetaSpec(2.0, 1.0, TwistSpec(2, 1), WeightVector{1}))
                                - std::numbers::pi * std::numbers::pi / 6);
    char buf[120];
    std::snprintf(buf, sizeof buf, "max |value - 2 eta(s)| = %.2e, |value(2) - pi^2/6| = %.2e", worst, pi2);
    return {worst < 1e-8 && pi2 < 1e-8, buf};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"box sum example equals 79275 by both methods", box_example},
        {"closed form equals enumeration on 200 random boxes", random_closed_vs_enumeration},
        {"single-point box gives x^s", origin_box},
        {"classical Euler polynomials and Bernoulli numbers", classical},
        {"generalized Euler numbers by convolution", convolution},
        {"twisted Euler-Maclaurin exact on polynomials", polynomial_exactness},
        {"continuation at negative integers equals Euler polynomial values", negative_orders},
        {"asymptotic expansion error decays in x at the predicted rate", x_decay},
        {"finite-sum expansion error non-increasing in N", box_decay},
        {"alternating zeta equals 2 eta(s)", eta},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
