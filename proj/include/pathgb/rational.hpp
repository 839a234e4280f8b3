#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace pathgb {

/// Arbitrary-precision integers and exact rationals. cpp_rational keeps the
/// canonical form (reduced, positive denominator) on every operation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Parses "p", "-p" or "p/q" with q > 0. Rejects anything else, including
/// zero denominators, which cpp_rational would not tolerate.
inline std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '-') {
    neg = true;
    ++pos;
  }
  auto read_digits = [&](BigInt& out) -> bool {
    if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') return false;
    out = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      out = out * 10 + (s[pos] - '0');
      ++pos;
    }
    return true;
  };
  BigInt num;
  if (!read_digits(num)) return std::nullopt;
  BigInt den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    if (!read_digits(den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;
  if (neg) num = -num;
  return Rational(num, den);
}

}  // namespace pathgb
