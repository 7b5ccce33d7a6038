#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace normord {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& v) { return v.str(); }

// "p/q", or just "p" when the denominator is one.
inline std::string to_string(const Rational& v) {
  const Integer num = boost::multiprecision::numerator(v);
  const Integer den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer binomial(unsigned n, unsigned k);

}  // namespace normord
