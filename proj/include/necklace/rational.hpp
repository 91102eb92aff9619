#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace necklace {

/// Exact arbitrary-precision rational scalar. All coefficients in the
/// library are of this type; there is no floating point anywhere.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num) / Rational(den);
}

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: '" + s + "'");
  }
}

inline Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace necklace
