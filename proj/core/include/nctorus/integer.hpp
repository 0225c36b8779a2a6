#pragma once

#include <gmpxx.h>

#include <string>

namespace nct {

using Int = mpz_class;
using Rational = mpq_class;

int sign(const Int& x);
Int gcd(const Int& a, const Int& b);
Int abs(const Int& x);

/// Floor division for any signs, b != 0.
Int floor_div(const Int& a, const Int& b);
/// Ceiling division for any signs, b != 0.
Int ceil_div(const Int& a, const Int& b);
/// Representative of a mod |m| in [0, |m|).
Int mod_floor(const Int& a, const Int& m);

/// Inverse of a modulo m. Requires gcd(a, m) = 1 and m != 0.
Int mod_inverse(const Int& a, const Int& m);

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

bool is_squarefree(const Int& d);

std::string to_string(const Int& x);
std::string to_string(const Rational& q);

/// Parses "12", "-3/4", "0.125" or "-1.5e-3" exactly. Throws
/// std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

bool fits_long(const Int& x);

}  // namespace nct
