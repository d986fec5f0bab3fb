#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace surfcalc {

/// Arbitrary-precision rational. Every quantity in the library is exact;
/// there are no floating-point numbers or tolerances anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

/// Parses "p", "-p", or "p/q". Used for rational fields in scenario files,
/// which are strings to keep them exact.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidInputError("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw InvalidInputError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidInputError("malformed rational literal '" + text + "'");
  }
}

inline long long to_long(const Rational& r) {
  if (!is_integer(r)) throw DomainError("expected an integer, got " + to_string(r));
  return numerator(r).convert_to<long long>();
}

} // namespace surfcalc
