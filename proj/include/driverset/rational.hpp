#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace driverset {

// All decision-making arithmetic runs on GMP rationals.  Values are kept
// canonical (lowest terms, positive denominator) at construction
// boundaries; GMP maintains that form through arithmetic.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p" and "p/q" in base 10, with an optional sign.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  try {
    r = Rational(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unparsable rational: '" + text + "'");
  }
  if (r.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

}  // namespace driverset
