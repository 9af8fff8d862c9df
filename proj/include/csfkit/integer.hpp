#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace csfkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Integer& x) { return x.str(); }

inline Integer from_decimal(const std::string& s) { return Integer(s); }

inline bool is_zero(const Integer& x) { return x.is_zero(); }

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace csfkit
