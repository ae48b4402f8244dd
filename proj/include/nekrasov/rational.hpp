#pragma once
#include <gmpxx.h>

#include <string>

namespace nekrasov {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Canonical p/q (mpq_class(p, q) alone does not reduce).
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q" and finite decimals such as "-1.25".
Rational parse_rational(const std::string& s);

}  // namespace nekrasov
