#pragma once

#include "twistsum/euler_maclaurin.hpp"
#include "twistsum/powersum.hpp"
#include "twistsum/zeta.hpp"

#include <json.hpp>

namespace twistsum {

using Json = nlohmann::ordered_json;

// Exact values are strings: a rational is "p" or "p/q". A non-rational element of
// Q(zeta_k) is {"k": k, "coeffs": ["c0", "c1", ...]} in the power basis of zeta_k.
// Floating values are {"re": x, "im": y}.

Json to_json(const Rational& value);
Json to_json(const CyclotomicNumber& value);
Json to_json(const PolynomialX& poly);
Json to_json(Complex value);
Json to_json(const SubsetTerm& term);
Json to_json(const EMResult& result);
Json to_json(const Lemma2Report& report);
Json to_json(const DecayReport& report);

Rational rational_from_json(const Json& j);
/// Accepts either exact form; a rational string is placed in Q(zeta_order).
CyclotomicNumber cyclotomic_from_json(const Json& j, int order = 1);
PolynomialX polynomial_from_json(const Json& j);
Complex complex_from_json(const Json& j);

/// Human-readable form such as "2/3 + 1/3*z" (z = zeta_k).
std::string to_text(const CyclotomicNumber& value);
std::string to_text(const PolynomialX& poly);
std::string to_text(Complex value);

} // namespace twistsum
