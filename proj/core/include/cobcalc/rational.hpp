#ifndef COBCALC_RATIONAL_HPP
#define COBCALC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cobcalc {

// Exact arbitrary-precision rational, the coefficient type of everything
// in this library. GMP keeps values canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders as "p/q", always with the denominator ("3" -> "3/1").
std::string fraction_str(const Rational& r);

/// Renders as "p" when the denominator is 1, else "p/q".
std::string pretty_str(const Rational& r);

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view s);

bool is_integer(const Rational& r);

/// binomial(n, k) over the integers; zero when k < 0 or k > n.
Rational binomial(long n, long k);

}  // namespace cobcalc

#endif
