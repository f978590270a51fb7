#include "twistsum/cli.hpp"

#include "twistsum/errors.hpp"
#include "twistsum/serialize.hpp"
#include "twistsum/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <typeinfo>

namespace twistsum::cli {

namespace {

struct Common {
    std::string format = "json";
    std::string out_file;
    double atol = 1e-10;
    double rtol = 1e-8;
};

// A finished command: its JSON document and whether it counts as a failure.
struct Outcome {
    Json doc;
    bool failed = false;
};

Json weights_json(const WeightVector& w)
{
    return Json(w.entries());
}

Complex parse_complex(const std::string& text)
{
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            return std::stod(text);
        }
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--s", "expected RE or RE,IM, got '" + text + "'");
    }
}

Rational parse_exact(const std::string& flag, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const Error&) {
        throw CLI::ValidationError(flag, "expected a rational such as 5/2, got '" + text + "'");
    }
}

AsymptoticPrefactor parse_prefactor(const std::string& name)
{
    return name == "shifted" ? AsymptoticPrefactor::shifted_pochhammer : AsymptoticPrefactor::continuation;
}

SmoothFunction parse_preset(const std::string& preset, unsigned q)
{
    const auto colon = preset.find(':');
    const std::string kind = preset.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : preset.substr(colon + 1);
    std::vector<double> values;
    std::stringstream ss(body);
    std::string item;
    try {
        while (std::getline(ss, item, ',')) {
            values.push_back(std::stod(item));
        }
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--preset", "bad number in '" + preset + "'");
    }
    if (kind == "poly" && !values.empty()) {
        return SmoothFunction::polynomial(values, q);
    }
    if (kind == "exp" && (values.size() == 1 || values.size() == 2)) {
        return SmoothFunction::exponential(Complex(values[0], values.size() == 2 ? values[1] : 0.0), q);
    }
    throw CLI::ValidationError("--preset", "expected poly:c0,c1,... or exp:alpha[,im], got '" + preset + "'");
}

// Renders a result document as "key: value" lines.
void render_text(const Json& doc, std::ostream& os, const std::string& indent = "")
{
    auto scalar = [](const Json& v) -> std::string {
        if (v.is_string()) {
            return v.get<std::string>();
        }
        if (v.is_object() && v.contains("re") && v.contains("im") && v.size() == 2) {
            return to_text(complex_from_json(v));
        }
        if (v.is_object() && v.contains("k") && v.contains("coeffs") && v.size() == 2) {
            try {
                const auto& c = v["coeffs"];
                if (!c.empty() && c[0].is_string()) {
                    return to_text(cyclotomic_from_json(v));
                }
                return to_text(polynomial_from_json(v));
            } catch (const Error&) {
            }
        }
        return v.dump();
    };
    for (const auto& [key, value] : doc.items()) {
        const bool nested = value.is_object() && scalar(value) == value.dump();
        const bool rows = value.is_array() && !value.empty() && (value[0].is_object() || value[0].is_array());
        if (nested) {
            os << indent << key << ":\n";
            render_text(value, os, indent + "  ");
        } else if (rows) {
            os << indent << key << ":\n";
            for (const auto& row : value) {
                if (row.is_object() && scalar(row) == row.dump()) {
                    os << indent << "  -\n";
                    render_text(row, os, indent + "    ");
                } else {
                    os << indent << "  " << scalar(row) << "\n";
                }
            }
        } else if (value.is_array()) {
            os << indent << key << ": [";
            for (std::size_t i = 0; i < value.size(); ++i) {
                os << (i ? ", " : "") << scalar(value[i]);
            }
            os << "]\n";
        } else {
            os << indent << key << ": " << scalar(value) << "\n";
        }
    }
}

std::string error_kind(const std::exception& e)
{
    if (dynamic_cast<const SingularTwist*>(&e)) return "singular_twist";
    if (dynamic_cast<const DomainError*>(&e)) return "domain_error";
    if (dynamic_cast<const OrderMismatch*>(&e)) return "order_mismatch";
    if (dynamic_cast<const DivisionByZero*>(&e)) return "division_by_zero";
    if (dynamic_cast<const AccelerationFailure*>(&e)) return "acceleration_failure";
    return "error";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact and numeric twisted power sums, generalized Euler polynomials and Euler-zeta values",
                 "twistsum"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", common.out_file, "Write the result to FILE instead of stdout");
    app.add_option("--atol", common.atol, "Absolute tolerance")->envname("TWISTSUM_ATOL");
    app.add_option("--rtol", common.rtol, "Relative tolerance")->envname("TWISTSUM_RTOL");

    std::function<Outcome()> action;

    // euler-gen
    struct {
        int k = 2;
        long long t = 1;
        std::vector<long long> weights;
        unsigned order = 0;
        std::string x;
        bool poly = false;
        bool check = false;
    } eg;
    auto* euler_gen = app.add_subcommand("euler-gen", "Generalized Euler numbers E_0..E_order (and polynomials)");
    euler_gen->add_option("--k", eg.k, "Twist modulus")->check(CLI::Range(2, 1000));
    euler_gen->add_option("--t", eg.t, "Twist numerator");
    euler_gen->add_option("--weights", eg.weights, "Weights a1,a2,...")->required()->delimiter(',');
    euler_gen->add_option("--order", eg.order, "Largest index")->required()->check(CLI::Range(0u, 200u));
    euler_gen->add_option("--x", eg.x, "Also evaluate E_m(x) at this rational");
    euler_gen->add_flag("--poly", eg.poly, "Include the polynomials E_m(x)");
    euler_gen->add_flag("--check", eg.check, "Compare with the convolution construction");
    euler_gen->callback([&] {
        action = [&] {
            const TwistSpec twist(eg.k, eg.t);
            const WeightVector weights(eg.weights);
            Json doc{{"k", eg.k}, {"t", twist.t()}, {"weights", weights_json(weights)}, {"order", eg.order}};
            Rational x;
            if (!eg.x.empty()) {
                x = parse_exact("--x", eg.x);
            }
            Json numbers = Json::array();
            for (const auto& e : gen_euler_numbers(eg.order, twist, weights)) {
                numbers.push_back(to_json(e));
            }
            doc["numbers"] = numbers;
            if (eg.poly || !eg.x.empty()) {
                Json polys = Json::array();
                Json values = Json::array();
                for (const auto& p : gen_euler_polys(eg.order, twist, weights)) {
                    polys.push_back(to_json(p));
                    values.push_back(to_json(p(x)));
                }
                if (eg.poly) {
                    doc["polynomials"] = polys;
                }
                if (!eg.x.empty()) {
                    doc["x"] = to_json(x);
                    doc["values"] = values;
                }
            }
            Outcome o{doc};
            if (eg.check) {
                const bool equal = gen_euler_numbers(eg.order, twist, weights)
                                   == gen_euler_numbers_by_convolution(eg.order, twist, weights);
                o.doc["convolution_equal"] = equal;
                o.failed = !equal;
            }
            return o;
        };
    });

    // c-values
    struct {
        unsigned n = 1;
        int k = 2;
        long long a = 1;
        std::string x;
        std::vector<long long> weights;
    } cv;
    auto* c_values = app.add_subcommand("c-values", "Twisted Bernoulli combinations and their constants");
    c_values->add_option("--n", cv.n, "Degree")->required()->check(CLI::Range(0u, 200u));
    c_values->add_option("--k", cv.k, "Modulus")->check(CLI::Range(2, 1000));
    c_values->add_option("--a", cv.a, "Twist numerator (k must not divide it)");
    c_values->add_option("--x", cv.x, "Evaluate the periodic version at this rational");
    c_values->add_option("--weights", cv.weights, "Also give the starred constants of these weights")->delimiter(',');
    c_values->callback([&] {
        action = [&] {
            const CPolySpec spec(cv.n, cv.k, cv.a);
            Json constants = Json::array();
            for (unsigned l = 0; l <= cv.n; ++l) {
                constants.push_back(to_json(em_constant(l, cv.k, cv.a)));
            }
            Json doc{{"n", cv.n}, {"k", cv.k}, {"a", cv.a}, {"c_poly", to_json(c_poly(spec))},
                     {"em_constants", constants}, {"c_star", to_json(c_star(cv.n, cv.k, cv.a))}};
            if (!cv.x.empty()) {
                const Rational x = parse_exact("--x", cv.x);
                doc["x"] = to_json(x);
                doc["c_tilde"] = to_json(c_tilde(spec, x));
            }
            if (!cv.weights.empty()) {
                Json multi = Json::array();
                for (const auto& c : c_star_multi_all(cv.n, cv.k, WeightVector(cv.weights))) {
                    multi.push_back(to_json(c));
                }
                doc["weights"] = cv.weights;
                doc["c_star_multi"] = multi;
            }
            return Outcome{doc};
        };
    });

    // sum
    struct {
        std::vector<long long> weights;
        std::vector<long long> limits;
        std::string x = "0";
        unsigned s = 0;
        int k = 2;
        long long t = 1;
        std::string method = "closed";
        bool trace = false;
    } sm;
    auto* sum = app.add_subcommand("sum", "Finite twisted power sum over a box");
    sum->add_option("--weights", sm.weights, "Weights a1,a2,...")->required()->delimiter(',');
    sum->add_option("--limits", sm.limits, "Upper limits n1,n2,...")->required()->delimiter(',');
    sum->add_option("--x", sm.x, "Nonnegative rational shift");
    sum->add_option("--s", sm.s, "Nonnegative integer exponent")->required();
    sum->add_option("--k", sm.k, "Twist modulus")->check(CLI::Range(2, 1000));
    sum->add_option("--t", sm.t, "Twist numerator");
    sum->add_option("--method", sm.method, "closed, brute or both")->check(CLI::IsMember({"closed", "brute", "both"}));
    sum->add_flag("--trace", sm.trace, "Include the per-subset decomposition");
    sum->callback([&] {
        action = [&] {
            if (sm.weights.size() > max_closed_rank) {
                throw DomainError("at most " + std::to_string(max_closed_rank) + " weights are supported");
            }
            const SumSpec spec(WeightVector(sm.weights), sm.limits, parse_exact("--x", sm.x), sm.s,
                               TwistSpec(sm.k, sm.t));
            Json doc{{"weights", sm.weights}, {"limits", sm.limits}, {"x", to_json(spec.x)}, {"s", sm.s},
                     {"k", sm.k}, {"t", spec.twist.t()}};
            std::optional<CyclotomicNumber> closed, brute;
            if (sm.method != "brute") {
                const auto traced = closed_sum_traced(spec);
                closed = traced.value;
                doc["closed"] = to_json(traced.value);
                if (sm.trace) {
                    Json terms = Json::array();
                    for (const auto& term : traced.terms) {
                        terms.push_back(to_json(term));
                    }
                    doc["terms"] = terms;
                }
            }
            if (sm.method != "closed") {
                double points = 1;
                for (long long n : sm.limits) {
                    points *= static_cast<double>(n + 1);
                }
                if (points > 5e7) {
                    throw DomainError("brute force over more than 5e7 lattice points refused");
                }
                brute = brute_sum(spec);
                doc["brute"] = to_json(*brute);
            }
            Outcome o{doc};
            if (closed && brute) {
                o.doc["equal"] = *closed == *brute;
                o.failed = !(*closed == *brute);
            }
            return o;
        };
    });

    // em-sum
    struct {
        std::string preset;
        long long m = 0;
        long long n = 1;
        int k = 2;
        long long a = 1;
        unsigned q = 1;
        bool scaled = false;
    } em;
    auto* em_sum = app.add_subcommand("em-sum", "Twisted Euler-Maclaurin summation of a preset function");
    em_sum->add_option("--preset", em.preset, "poly:c0,c1,... or exp:alpha[,im]")->required();
    em_sum->add_option("--m", em.m, "Lower end")->required();
    em_sum->add_option("--n", em.n, "Upper end")->required();
    em_sum->add_option("--k", em.k, "Modulus")->check(CLI::Range(2, 1000));
    em_sum->add_option("--a", em.a, "Twist numerator");
    em_sum->add_option("--q", em.q, "Expansion depth")->check(CLI::Range(1u, 60u));
    em_sum->add_flag("--scaled", em.scaled, "Sum g(r) over r = mk+1..nk instead");
    em_sum->callback([&] {
        action = [&] {
            const auto f = parse_preset(em.preset, em.q);
            const auto r = em.scaled ? em_sum_scaled(f, em.m, em.n, em.k, em.a, em.q)
                                     : em_sum_unit(f, em.m, em.n, em.k, em.a, em.q);
            Json doc{{"preset", em.preset}, {"m", em.m}, {"n", em.n}, {"k", em.k}, {"a", em.a}, {"q", em.q},
                     {"scaled", em.scaled}};
            doc.update(to_json(r));
            return Outcome{doc};
        };
    });

    // zeta
    struct {
        std::string s;
        double x = 1.0;
        int k = 2;
        long long t = 1;
        std::vector<long long> weights;
        std::optional<unsigned> q;
        std::string method = "accel";
        long long terms = 100000;
        std::string prefactor = "continuation";
        unsigned max_terms = 400;
    } zt;
    auto* zeta = app.add_subcommand("zeta", "Generalized Euler-zeta value zeta_E(s, x, 2 pi i t/k; A)");
    zeta->add_option("--s", zt.s, "Order RE or RE,IM")->required();
    zeta->add_option("--x", zt.x, "Shift x >= 0");
    zeta->add_option("--k", zt.k, "Twist modulus")->check(CLI::Range(2, 1000));
    zeta->add_option("--t", zt.t, "Twist numerator");
    zeta->add_option("--weights", zt.weights, "Weights a1,a2,...")->required()->delimiter(',');
    zeta->add_option("--q", zt.q, "Expansion depth for asym")->check(CLI::Range(1u, 60u));
    zeta->add_option("--method", zt.method, "direct, accel or asym")->check(CLI::IsMember({"direct", "accel", "asym"}));
    zeta->add_option("--terms", zt.terms, "Indices per axis for direct")->check(CLI::Range(1LL, 100000000LL));
    zeta->add_option("--prefactor", zt.prefactor, "continuation or shifted (asym)")
        ->check(CLI::IsMember({"continuation", "shifted"}));
    zeta->add_option("--max-terms", zt.max_terms, "Block cap for accel");
    zeta->callback([&] {
        action = [&] {
            const Complex s = parse_complex(zt.s);
            const TwistSpec twist(zt.k, zt.t);
            const WeightVector weights(zt.weights);
            Json doc{{"s", to_json(s)}, {"x", zt.x}, {"k", zt.k}, {"t", twist.t()}, {"weights", zt.weights},
                     {"method", zt.method}};
            if (zt.method == "direct") {
                const ZetaSpec spec(s, zt.x, twist, weights);
                doc["value"] = to_json(zeta_direct(spec, zt.terms));
                if (weights.size() == 1) {
                    doc["tail_bound"] = zeta_direct_tail_bound(spec, zt.terms);
                }
            } else if (zt.method == "accel") {
                doc["value"] = to_json(zeta_accelerated(ZetaSpec(s, zt.x, twist, weights), {1e-13, zt.max_terms}));
            } else {
                const ZetaSpec spec(-s, zt.x, twist, weights, zt.q);
                doc["q"] = spec.q;
                doc["prefactor"] = zt.prefactor;
                doc["value"] = to_json(zeta_asymptotic(spec, parse_prefactor(zt.prefactor)));
            }
            return Outcome{doc};
        };
    });

    // lemma2
    struct {
        unsigned m = 0;
        std::string c = "0";
        int k = 2;
        long long t = 1;
        std::vector<long long> weights;
    } lm;
    auto* lemma2 = app.add_subcommand("lemma2", "Continuation at s = -m against E_m(c), both normalizations");
    lemma2->add_option("--m", lm.m, "Nonnegative integer")->required()->check(CLI::Range(0u, 30u));
    lemma2->add_option("--c", lm.c, "Nonnegative rational shift");
    lemma2->add_option("--k", lm.k, "Twist modulus")->check(CLI::Range(2, 1000));
    lemma2->add_option("--t", lm.t, "Twist numerator");
    lemma2->add_option("--weights", lm.weights, "Weights a1,a2,...")->required()->delimiter(',');
    lemma2->callback([&] {
        action = [&] {
            const auto report = lemma2_check(lm.m, parse_exact("--c", lm.c), TwistSpec(lm.k, lm.t),
                                             WeightVector(lm.weights), std::max(common.atol, 1e-6));
            return Outcome{to_json(report), !report.plain_matches};
        };
    });

    // probe
    struct {
        std::string target;
        std::vector<double> scales;
        std::string s;
        double x = 1.0;
        int k = 2;
        long long t = 1;
        std::vector<long long> weights;
        std::optional<unsigned> q;
        std::string prefactor = "continuation";
    } pr;
    auto* probe = app.add_subcommand("probe", "Decay of the asymptotic error across scales");
    probe->add_option("--target", pr.target, "t3 (vary N) or t4 (vary x)")->required()->check(CLI::IsMember({"t3", "t4"}));
    probe->add_option("--scales", pr.scales, "Increasing scales")->required()->delimiter(',');
    probe->add_option("--s", pr.s, "Power s in (A.M + x)^s, RE or RE,IM")->required();
    probe->add_option("--x", pr.x, "Shift for t3");
    probe->add_option("--k", pr.k, "Twist modulus")->check(CLI::Range(2, 1000));
    probe->add_option("--t", pr.t, "Twist numerator");
    probe->add_option("--weights", pr.weights, "Weights a1,a2,...")->required()->delimiter(',');
    probe->add_option("--q", pr.q, "Expansion depth")->check(CLI::Range(1u, 60u));
    probe->add_option("--prefactor", pr.prefactor, "continuation or shifted")
        ->check(CLI::IsMember({"continuation", "shifted"}));
    probe->callback([&] {
        action = [&] {
            const ZetaSpec spec(parse_complex(pr.s), pr.x, TwistSpec(pr.k, pr.t), WeightVector(pr.weights), pr.q);
            const auto report = decay_probe(pr.target == "t3" ? DecayTarget::theorem3 : DecayTarget::theorem4, spec,
                                            pr.scales, parse_prefactor(pr.prefactor), common.atol, common.rtol);
            Json doc = to_json(report);
            doc["q"] = spec.q;
            return Outcome{doc};
        };
    });

    // verify
    std::string suite_text = "all";
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("--suite", suite_text, "powersum, euler, cvalues, em, zeta or all")
        ->check(CLI::IsMember({"powersum", "euler", "cvalues", "em", "zeta", "all"}));
    verify->add_option("--seed", seed, "Random seed");
    verify->callback([&] {
        action = [&] {
            const auto report = run_verify(*parse_suite(suite_text), seed, {common.atol, common.rtol});
            Json props = Json::array();
            for (const auto& p : report.properties) {
                Json item{{"suite", p.suite}, {"name", p.name}, {"passed", p.passed()}, {"checked", p.checked},
                          {"failed", p.failed}};
                if (!p.passed()) {
                    item["counterexample"] = p.counterexample;
                }
                props.push_back(item);
            }
            Json doc{{"suite", suite_text}, {"seed", seed}, {"properties", props}, {"failures", report.failures()}};
            return Outcome{doc, report.failures() > 0};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "twistsum: " << e.what() << "\n";
        if (!app.get_subcommands().empty()) {
            err << "see: twistsum " << app.get_subcommands().front()->get_name() << " --help\n";
        } else {
            err << "see: twistsum --help\n";
        }
        return exit_usage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!common.out_file.empty()) {
        file.open(common.out_file);
        if (!file) {
            err << "twistsum: cannot open " << common.out_file << " for writing\n";
            return exit_usage;
        }
        sink = &file;
    }

    Outcome outcome;
    try {
        outcome = action();
    } catch (const CLI::ValidationError& e) {
        err << "twistsum: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        Json doc{{"error", {{"type", error_kind(e)}, {"message", e.what()}}}};
        if (const auto* acc = dynamic_cast<const AccelerationFailure*>(&e)) {
            doc["error"]["best_estimate"] = to_json(acc->best_estimate);
            doc["error"]["achieved_tolerance"] = acc->achieved_tolerance;
        }
        if (common.format == "json") {
            *sink << doc.dump(2) << "\n";
        } else {
            err << "twistsum: " << e.what() << "\n";
        }
        return exit_computation;
    }

    if (common.format == "json") {
        *sink << outcome.doc.dump(2) << "\n";
    } else {
        render_text(outcome.doc, *sink);
    }
    return outcome.failed ? exit_computation : exit_ok;
}

} // namespace twistsum::cli
