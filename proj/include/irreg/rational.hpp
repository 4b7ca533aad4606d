#pragma once

#include "irreg/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace irreg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den in lowest terms; throws InputError for a zero denominator.
inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw InputError("zero denominator");
  BigInt n(num), d(den);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& r);

/// Decimal rendering with the given number of significant digits ("%g" style).
std::string to_decimal(const Rational& r, int significant_digits = 6);

/// "num/den (decimal)" for non-integers, "num" otherwise.
std::string to_display(const Rational& r);

/// Parses "a", "-a", "a/b". Throws InputError.
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

}  // namespace irreg
