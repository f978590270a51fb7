#pragma once

#include "twistsum/twisted_c.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace twistsum {

/// f and its first max_order() derivatives, supplied by the caller.
class SmoothFunction {
public:
    using Evaluator = std::function<Complex(double)>;

    explicit SmoothFunction(std::vector<Evaluator> derivatives);

    /// sum_i c_i x^i with derivatives up to max_order.
    static SmoothFunction polynomial(std::vector<double> coeffs, unsigned max_order);
    /// e^{alpha x}.
    static SmoothFunction exponential(Complex alpha, unsigned max_order);

    unsigned max_order() const noexcept { return static_cast<unsigned>(d_.size()) - 1; }
    Complex operator()(double x) const { return d_[0](x); }
    Complex derivative(unsigned order, double x) const;
    const Evaluator& evaluator(unsigned order) const;

private:
    std::vector<Evaluator> d_;
};

/// Central-difference spot check that each evaluator is the derivative of the
/// previous one, at `points` uniform points of [lo, hi].
bool derivative_check(const SmoothFunction& f, double lo, double hi, unsigned points = 8,
                      std::uint64_t seed = 1, double rtol = 1e-5);

struct EMResult {
    Complex main_terms;
    Complex remainder;
    Complex total;
    Complex direct;
    double abs_error;
};

/// sum_{r=m}^{n-1} sum_{l=1}^{k} zeta^{al} f(r + l/k) against its endpoint expansion of depth q.
EMResult em_sum_unit(const SmoothFunction& f, long long m, long long n, int k, long long a, unsigned q);

/// sum_{r=mk+1}^{nk} zeta^{ar} g(r), the same identity under f(x) = g(kx).
EMResult em_sum_scaled(const SmoothFunction& g, long long m, long long n, int k, long long a, unsigned q);

/// ((-1)^{q+1}/q!) int_lo^hi c_tilde_q(x; a) fq(x) dx, Gauss-Legendre on each cell
/// between consecutive multiples of 1/k.
Complex quad_remainder(unsigned q, int k, long long a, const SmoothFunction::Evaluator& fq, double lo, double hi);

} // namespace twistsum
