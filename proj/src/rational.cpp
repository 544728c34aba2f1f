#include "liex/rational.hpp"

#include "liex/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace liex {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw InputError("malformed rational '" + std::string(whole) + "'");
  for (size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer num = numerator_of(q), den = denominator_of(q);
  const Integer rn = boost::multiprecision::sqrt(num), rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace liex
