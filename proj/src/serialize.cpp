#include "twistsum/serialize.hpp"

#include "twistsum/errors.hpp"

#include <cmath>
#include <sstream>

namespace twistsum {

Json to_json(const Rational& value)
{
    return to_string(value);
}

Json to_json(const CyclotomicNumber& value)
{
    if (value.is_rational()) {
        return to_string(value.rational());
    }
    Json coeffs = Json::array();
    for (const auto& c : value.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return Json{{"k", value.order()}, {"coeffs", coeffs}};
}

Json to_json(const PolynomialX& poly)
{
    Json coeffs = Json::array();
    for (const auto& c : poly.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return Json{{"k", poly.order()}, {"coeffs", coeffs}};
}

Json to_json(Complex value)
{
    return Json{{"re", value.real()}, {"im", value.imag()}};
}

Json to_json(const SubsetTerm& term)
{
    return Json{{"mask", term.mask},
                {"sign", term.sign},
                {"twist_exponent", term.twist_exponent},
                {"argument", to_json(term.argument)},
                {"euler_value", to_json(term.euler_value)},
                {"contribution", to_json(term.contribution)}};
}

Json to_json(const EMResult& result)
{
    return Json{{"main_terms", to_json(result.main_terms)},
                {"remainder", to_json(result.remainder)},
                {"total", to_json(result.total)},
                {"direct", to_json(result.direct)},
                {"abs_error", result.abs_error}};
}

Json to_json(const Lemma2Report& report)
{
    return Json{{"m", report.m},
                {"c", to_json(report.c)},
                {"accelerated", to_json(report.accelerated)},
                {"exact", to_json(report.exact)},
                {"plain_error", report.plain_error},
                {"divided_error", report.divided_error},
                {"plain_matches", report.plain_matches},
                {"divided_matches", report.divided_matches}};
}

namespace {

Json finite_or_null(double v)
{
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

} // namespace

Json to_json(const DecayReport& report)
{
    Json points = Json::array();
    for (const auto& [scale, error] : report.points) {
        points.push_back(Json::array({scale, error}));
    }
    return Json{{"points", points},
                {"fitted", finite_or_null(report.fitted)},
                {"predicted", report.predicted},
                {"leading_bound", report.leading_bound},
                {"exact", report.exact},
                {"strictly_decreasing", report.strictly_decreasing},
                {"monotone", report.monotone}};
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return to_rational(j.get<long long>());
    }
    throw DomainError("expected an exact rational string, got " + j.dump());
}

CyclotomicNumber cyclotomic_from_json(const Json& j, int order)
{
    if (j.is_object()) {
        if (!j.contains("k") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
            throw DomainError("cyclotomic object needs \"k\" and \"coeffs\"");
        }
        std::vector<Rational> coeffs;
        for (const auto& c : j["coeffs"]) {
            coeffs.push_back(rational_from_json(c));
        }
        CyclotomicNumber value(j["k"].get<int>(), std::move(coeffs));
        return order % value.order() == 0 ? value.promote(order) : value;
    }
    return CyclotomicNumber(rational_from_json(j), order);
}

PolynomialX polynomial_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("k") || !j.contains("coeffs")) {
        throw DomainError("polynomial object needs \"k\" and \"coeffs\"");
    }
    const int order = j["k"].get<int>();
    std::vector<CyclotomicNumber> coeffs;
    for (const auto& c : j["coeffs"]) {
        coeffs.push_back(cyclotomic_from_json(c, order));
    }
    return PolynomialX(order, std::move(coeffs));
}

Complex complex_from_json(const Json& j)
{
    if (j.is_number()) {
        return j.get<double>();
    }
    if (!j.is_object() || !j.contains("re")) {
        throw DomainError("expected {\"re\", \"im\"}, got " + j.dump());
    }
    return {j["re"].get<double>(), j.value("im", 0.0)};
}

std::string to_text(const CyclotomicNumber& value)
{
    if (value.is_rational()) {
        return to_string(value.rational());
    }
    std::string out;
    for (std::size_t i = 0; i < value.coeffs().size(); ++i) {
        const Rational& c = value.coeffs()[i];
        if (c == 0) {
            continue;
        }
        std::string term = to_string(c < 0 ? Rational(-c) : c);
        if (i > 0) {
            const std::string power = i == 1 ? "z" : "z^" + std::to_string(i);
            term = term == "1" ? power : term + "*" + power;
        }
        if (out.empty()) {
            out = c < 0 ? "-" + term : term;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return out + " (z = zeta_" + std::to_string(value.order()) + ")";
}

std::string to_text(const PolynomialX& poly)
{
    if (poly.is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = poly.degree(); i >= 0; --i) {
        const auto& c = poly.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        std::string coeff = c.is_rational() ? to_string(c.rational()) : "(" + to_text(c) + ")";
        std::string term = i == 0 ? coeff : coeff + "*x" + (i > 1 ? "^" + std::to_string(i) : "");
        out += out.empty() ? term : " + " + term;
    }
    return out;
}

std::string to_text(Complex value)
{
    std::ostringstream os;
    os.precision(17);
    os << value.real();
    if (value.imag() != 0.0) {
        os << (value.imag() < 0 ? " - " : " + ") << std::abs(value.imag()) << "i";
    }
    return os.str();
}

} // namespace twistsum
