#pragma once

#include "twistsum/powersum.hpp"
#include "twistsum/twisted_c.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace twistsum {

enum class Suite { powersum, euler, cvalues, em, zeta, all };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite suite);

struct Tolerance {
    double atol = 1e-10;
    double rtol = 1e-8;

    bool close(Complex a, Complex b) const { return std::abs(a - b) <= atol + rtol * std::abs(b); }
};

struct PropertyResult {
    std::string suite;
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string counterexample; ///< first failing instance, empty when none

    bool passed() const { return failed == 0; }
};

struct VerifyReport {
    std::uint64_t seed;
    std::vector<PropertyResult> properties;

    std::size_t failures() const;
};

/// Runs the property checks of one suite (or all). Deterministic given the seed.
VerifyReport run_verify(Suite suite, std::uint64_t seed, const Tolerance& tolerance = {});

// Random instance generators shared by the suites and the test programs. Draws use
// gen() % n so the sequences do not depend on the standard library's distributions.

inline long long draw(std::mt19937_64& gen, long long lo, long long hi)
{
    return lo + static_cast<long long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// A twist (k drawn from moduli) and r weights in [1, max_weight] admissible for it.
std::pair<TwistSpec, WeightVector> random_twist_and_weights(std::mt19937_64& gen, const std::vector<int>& moduli,
                                                            std::size_t r, long long max_weight);

/// r <= 3, a_i <= 5, n_i <= 8, x in {0, 1, 5/2}, s <= 6, k in {2, 3, 4, 6}.
SumSpec random_sum_spec(std::mt19937_64& gen);

std::string describe(const SumSpec& spec);
std::string describe(const TwistSpec& twist, const WeightVector& weights);

} // namespace twistsum
