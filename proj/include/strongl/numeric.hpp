#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace strongl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// p/q for any nonzero q (Rational's own constructor rejects q < 0).
inline Rational make_rational(BigInt p, BigInt q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(p, q);
}

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const BigInt& v) { return v.sign(); }

/// Formats as `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

/// Parses `p/q`, `-p/q` or an integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace strongl
