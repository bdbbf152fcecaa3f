#ifndef QLIE_RATIONAL_HPP
#define QLIE_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qlie {

// Exact rational backed by GMP. mpq_class keeps values canonical as long as
// every construction from a numerator/denominator pair goes through
// make_rational() or parse_rational().
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p/q", or "p" when q == 1. Always lowest terms.
std::string to_string(const Rational &q);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument with message
// "zero denominator" or "malformed rational".
Rational parse_rational(std::string_view text);

} // namespace qlie

#endif
