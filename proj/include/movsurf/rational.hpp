#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace movsurf {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" or "p"; always canonical.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws ParseError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow(const Rational& base, unsigned exponent);

}  // namespace movsurf
