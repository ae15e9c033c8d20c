#include "strongl/numeric.hpp"

#include <stdexcept>
#include <string>

namespace strongl {

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  const BigInt d = denom(r);
  if (d == 1) return numer(r).str();
  return numer(r).str() + "/" + d.str();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational: '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const BigInt p = parse_integer(t.substr(0, slash), text);
  const std::string_view qs = t.substr(slash + 1);
  if (!qs.empty() && (qs[0] == '-' || qs[0] == '+')) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  const BigInt q = parse_integer(qs, text);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

}  // namespace strongl
