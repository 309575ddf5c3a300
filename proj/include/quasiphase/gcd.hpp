#pragma once

#include "quasiphase/poly2.hpp"

namespace quasiphase {

/// Greatest common divisor in Q[x, y], scaled to integer coefficients with
/// content 1 and a positive graded-lex leading coefficient. A constant result
/// (exactly 1) means p and q are coprime. Throws when both inputs are zero.
Poly2 gcd_bivariate(const Poly2& p, const Poly2& q);

/// Scales p to coprime integer coefficients with a positive leading term.
Poly2 normalize_primitive(const Poly2& p);

bool coprime(const Poly2& p, const Poly2& q);

} // namespace quasiphase
