#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "signet/errors.hpp"

namespace signet {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. Edge weights and the matrices derived from
/// them stay in this type so integer/decimal inputs keep exact arithmetic all
/// the way into rank computations.
using Rational = boost::rational<BigInt>;

inline Rational rational(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

inline double to_double(const Rational& r) {
  return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

inline int sign_of(const Rational& r) {
  if (r.numerator() == 0) return 0;
  return r.numerator() < 0 ? -1 : 1;
}

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

/// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw ValidationError("cannot convert non-finite value to rational");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  auto mant = static_cast<long long>(std::ldexp(m, 53));  // exact, 53-bit significand
  int shift = 53 - exp;
  BigInt num(mant);
  if (shift >= 0) return Rational(num, BigInt(1) << shift);
  return Rational(num << (-shift), BigInt(1));
}

/// Parses "-3", "1.25", "7/2", "-0.5e1"-free decimal forms exactly.
/// Fractions use "/" with integer numerator and denominator.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw ParseError("invalid number '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (num.empty() || den.empty()) fail();
    try {
      return Rational(BigInt(num), BigInt(den));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail();
    }
  }
  bool negative = false;
  size_t i = 0;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  BigInt num = 0;
  BigInt den = 1;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_dot) fail();
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
      seen_digit = true;
    } else {
      fail();
    }
  }
  if (!seen_digit) fail();
  if (negative) num = -num;
  return Rational(num, den);
}

/// Shortest faithful text form: integer, terminating decimal when the
/// denominator is 2^a 5^b, otherwise "p/q".
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return r.numerator().str();
  BigInt den = r.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return r.numerator().str() + "/" + r.denominator().str();
  int digits = std::max(twos, fives);
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = r.numerator() * (scale / r.denominator());
  bool neg = scaled < 0;
  std::string body = (neg ? -scaled : scaled).str();
  if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return (neg ? "-" : "") + body;
}

}  // namespace signet
