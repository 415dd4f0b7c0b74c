#ifndef Q2_RATIONAL_HPP
#define Q2_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace q2 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_positive_integer(const Rational& r) {
  return is_integer(r) && numerator(r) > 0;
}

inline bool is_nonnegative_integer(const Rational& r) {
  return is_integer(r) && numerator(r) >= 0;
}

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::invalid_argument("to_long: not an integer");
  return static_cast<long>(numerator(r));
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Int num = numerator(r), den = denominator(r);
  Int sn = sqrt(num), sd = sqrt(den);
  if (sn * sn == num && sd * sd == den) return Rational(sn, sd);
  return std::nullopt;
}

inline std::string rat_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

}  // namespace q2

#endif
