// Exact rational scalars. No floating point anywhere in this project:
// every decision downstream is a sign decision.
#pragma once

#include <gmpxx.h>

#include <string>

namespace positroid {

using Int = mpz_class;
using Rational = mpq_class;  // always canonicalized: reduced, denominator > 0

Rational make_rational(long num, long den = 1);

// Parses "p/q" or "p" (q > 0 after canonicalization); rejects junk.
Rational parse_rational(const std::string& s);

// Canonical form: "p/q", or just "p" when q == 1.
std::string rational_to_string(const Rational& q);

int sign_of(const Rational& q);

}  // namespace positroid
