#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "tempora/error.hpp"

namespace tempora {

// Exact rational with arbitrary-precision numerator and denominator. Always
// kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw SemanticError("rational with zero denominator");
  return Rational(Integer(num), Integer(den));
}

// "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.str(); }

// Parses "p", "-p", "p/q", "-p/q" (q > 0). Whitespace is not allowed.
inline Rational parse_rational(std::string_view text) {
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from == to) throw SyntaxError("expected digits in rational '" + std::string(text) + "'", from);
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw SyntaxError("unexpected character in rational '" + std::string(text) + "'", i);
      }
    }
    return Integer(std::string(text.substr(from, to - from)));
  };
  std::size_t start = 0;
  bool negative = false;
  if (!text.empty() && text[0] == '-') {
    negative = true;
    start = 1;
  }
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    num = digits(start, text.size());
  } else {
    num = digits(start, slash);
    den = digits(slash + 1, text.size());
    if (den == 0) throw SyntaxError("zero denominator in rational '" + std::string(text) + "'", slash + 1);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace tempora
