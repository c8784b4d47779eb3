#pragma once

#include <gmpxx.h>

#include <string>

namespace stab {

// Exact rational scalar used throughout the model/solver pipeline. No
// floating point enters any feasibility or rounding decision.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Renders as "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "p" or "p/q". Returns false on malformed input.
bool parse_rational(const std::string& text, Rational& out);

}  // namespace stab
