#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "tempdual/errors.hpp"

namespace tempdual {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_of(const Rational& x) {
  std::int64_t q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

// Representative of x modulo 1/modulus in [0, 1/modulus).
inline Rational reduce_mod(const Rational& x, std::int64_t modulus) {
  if (modulus <= 0) throw DomainError("reduce_mod: modulus must be positive");
  const Rational scaled = x * modulus;
  return (scaled - floor_of(scaled)) / modulus;
}

inline std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace detail {
inline std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}
}  // namespace detail

// Parses "p", "p/q" or "-p/q".
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text, text));
  const std::int64_t num = detail::parse_integer(text.substr(0, slash), text);
  const std::int64_t den = detail::parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline std::int64_t lcm_of(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace tempdual
