#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tbsym {

/// Exact rational arithmetic. Values are always stored reduced, with a
/// positive denominator, so equality comparisons are exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

/// Parses "p" or "p/q". Whitespace is not tolerated.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

inline BigInt factorial_big(int k) {
  if (k < 0) throw std::invalid_argument("factorial of negative number");
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace tbsym
