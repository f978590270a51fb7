#pragma once

// Dense polynomials over Q as plain coefficient vectors, lowest degree first.
// Internal helpers for the cyclotomic field; not part of the public interface.

#include "twistsum/rational.hpp"

#include <utility>
#include <vector>

namespace twistsum::detail {

using QPoly = std::vector<Rational>;

void trim(QPoly& p);
QPoly mul(const QPoly& a, const QPoly& b);
/// Quotient and remainder of a by a nonzero b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Reduces p in place modulo a monic modulus.
void reduce_monic(QPoly& p, const QPoly& modulus);
/// u with u * a = 1 modulo an irreducible modulus; a must be nonzero modulo it.
QPoly inverse_mod(const QPoly& a, const QPoly& modulus);

} // namespace twistsum::detail
