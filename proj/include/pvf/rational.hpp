#pragma once

#include <gmpxx.h>

#include <string>

namespace pvf {

/// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
/// denominator) as long as every mutation goes through its operators.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// num/den in canonical form. The two-argument mpq_class constructor does
/// not reduce, so every literal fraction goes through here.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
inline Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

}  // namespace pvf
