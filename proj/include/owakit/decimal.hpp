#pragma once

// Exact decimal parsing. Command-line values like "0.03" become the rational
// 3/100 with no binary rounding, so exact-mode transforms see the numbers the
// user typed; grids are generated in decimal arithmetic and converted to
// double once per value.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "owakit/binomial.hpp"

namespace owakit {

/// Parses "[+-]digits[.digits][(e|E)[+-]digits]" into an exact rational.
inline Rational parse_decimal(std::string_view text) {
  const std::string bad = "not a decimal number: '" + std::string(text) + "'";
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';

  BigInt mantissa = 0;
  int frac_digits = 0;
  bool any_digit = false, seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) ++frac_digits;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument(bad);

  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) exp_neg = text[pos++] == '-';
    bool exp_digit = false;
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
      exponent = exponent * 10 + (text[pos] - '0');
      if (exponent > 9999) throw std::invalid_argument(bad);
      exp_digit = true;
    }
    if (!exp_digit) throw std::invalid_argument(bad);
    if (exp_neg) exponent = -exponent;
  }
  if (pos != text.size()) throw std::invalid_argument(bad);

  BigInt num = negative ? -mantissa : mantissa;
  BigInt den = 1;
  long net = exponent - frac_digits;
  for (long t = 0; t < net; ++t) num *= 10;
  for (long t = 0; t > net; --t) den *= 10;
  return Rational(num, den);
}

/// Comma-separated decimals, e.g. "0,0.03,0.05".
inline std::vector<Rational> parse_decimal_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    out.push_back(parse_decimal(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// "start:stop[:step]" in exact decimal arithmetic: start, start+step, ...
/// up to stop inclusive (step defaults to 1). Must be strictly increasing
/// and land inside [lo, hi]; a plain decimal yields the single-element grid.
inline std::vector<Rational> parse_grid(std::string_view text, const Rational& lo, const Rational& hi) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  std::vector<Rational> values;
  if (parts.size() == 1) {
    values.push_back(parse_decimal(parts[0]));
  } else if (parts.size() == 2 || parts.size() == 3) {
    const Rational a = parse_decimal(parts[0]);
    const Rational b = parse_decimal(parts[1]);
    const Rational s = parts.size() == 3 ? parse_decimal(parts[2]) : Rational(1);
    if (s <= 0) throw std::invalid_argument("grid step must be positive in '" + std::string(text) + "'");
    if (b < a) throw std::invalid_argument("grid stop precedes start in '" + std::string(text) + "'");
    for (Rational v = a; v <= b; v += s) values.push_back(v);
  } else {
    throw std::invalid_argument("expected a decimal or start:stop[:step], got '" + std::string(text) + "'");
  }
  for (const Rational& v : values)
    if (v < lo || v > hi)
      throw std::invalid_argument("grid value " + v.convert_to<std::string>() + " outside [" +
                                  lo.convert_to<std::string>() + ", " + hi.convert_to<std::string>() + "]");
  return values;
}

}  // namespace owakit
