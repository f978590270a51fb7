#pragma once

#include "twistsum/twisted_c.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace twistsum {

/// Parameters of zeta_E(s, x, 2 pi i t/k; A) = 2^r sum_M zeta^{t A.M} (A.M + x)^{-s}.
///
/// zeta_direct, zeta_accelerated and lemma2_check read s as the order of zeta_E.
/// zeta_asymptotic, finite_sum_asymptotic and decay_probe read s as the power in
/// (A.M + x)^s, i.e. they approximate zeta_E(-s, ...).
struct ZetaSpec {
    ZetaSpec(Complex s, double x, TwistSpec twist, WeightVector weights, std::optional<unsigned> q = std::nullopt);

    Complex s;
    double x;
    TwistSpec twist;
    WeightVector weights;
    unsigned q; ///< expansion depth, default max(1, ceil(Re s))
};

/// Blocked partial sum with terms_per_axis indices per axis, rounded up to whole
/// periods of the twist. Needs Re s > 0.
Complex zeta_direct(const ZetaSpec& spec, long long terms_per_axis);

/// Abel-summation bound on the r = 1 truncation error of zeta_direct.
double zeta_direct_tail_bound(const ZetaSpec& spec, long long terms_per_axis);

struct AccelOptions {
    double tolerance = 1e-13; ///< on successive estimates, relative to max(1, |value|)
    unsigned max_terms = 400; ///< blocks per axis
};

/// Analytic continuation by iterated Euler transformation of the blocked series,
/// one axis at a time with the inner axes accelerated first.
Complex zeta_accelerated(const ZetaSpec& spec, const AccelOptions& options = {});

struct Lemma2Report {
    unsigned m;
    Rational c;
    Complex accelerated;      ///< zeta_E(-m, c) by acceleration
    CyclotomicNumber exact;   ///< E_m(c, j; A)
    Complex plain;            ///< exact, as a complex number
    Complex divided;          ///< exact / e^{jc}
    double plain_error;
    double divided_error;
    bool plain_matches;
    bool divided_matches;
};

/// Compares zeta_E(-m, c) with E_m(c) and with E_m(c)/e^{jc}.
Lemma2Report lemma2_check(unsigned m, const Rational& c, const TwistSpec& twist, const WeightVector& weights,
                          double tolerance = 1e-6, const AccelOptions& options = {});

/// Prefactor in front of C*_{s+r}(x - A.1; A).
enum class AsymptoticPrefactor {
    /// 2^r (-1)^r zeta^{-t A.1} / (k^r (s+1)_r); reproduces the continuation.
    continuation,
    /// 2^r / (k^{r-1} (s+2)_{r-1}), the reduced gamma-ratio form.
    shifted_pochhammer,
};

/// Main term for zeta_E(-s, x) from the starred constants, depth spec.q.
/// Needs Re s > -1 and x > A.1.
Complex zeta_asymptotic(const ZetaSpec& spec, AsymptoticPrefactor prefactor = AsymptoticPrefactor::continuation);

/// Approximation of sum_{0 <= M <= N} zeta^{t A.M} (A.M + x)^s: corner terms from the
/// expansion, the empty corner zeta_E(-s, x)/2^r by acceleration.
Complex finite_sum_asymptotic(const ZetaSpec& spec, const std::vector<long long>& limits,
                              AsymptoticPrefactor prefactor = AsymptoticPrefactor::continuation,
                              const AccelOptions& options = {});

/// The same finite sum by direct floating-point summation.
Complex finite_sum_exact(const ZetaSpec& spec, const std::vector<long long>& limits);

enum class DecayTarget { theorem3, theorem4 };

struct DecayReport {
    std::vector<std::pair<double, double>> points; ///< (scale, abs_error), increasing scale
    double fitted;          ///< least-squares slope of log error against log scale; NaN when exact
    double predicted;       ///< Re s - q + 2
    double leading_bound;   ///< Re s + r - q - 1, the exponent of the first omitted expansion term
    bool exact;             ///< fewer than two nonzero errors, nothing to fit
    bool strictly_decreasing;
    bool monotone;          ///< non-increasing up to atol + rtol * previous
};

/// theorem4: vary x and compare zeta_asymptotic with zeta_accelerated.
/// theorem3: set every limit to the scale and compare finite_sum_asymptotic with the finite sum.
DecayReport decay_probe(DecayTarget target, const ZetaSpec& spec, const std::vector<double>& scales,
                        AsymptoticPrefactor prefactor = AsymptoticPrefactor::continuation, double atol = 1e-10,
                        double rtol = 1e-8, const AccelOptions& options = {});

} // namespace twistsum
