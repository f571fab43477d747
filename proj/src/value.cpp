#include "proxylang/value.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace proxylang {

std::string_view value_kind(const Value& v) {
  switch (v.index()) {
    case 0: return "undefined";
    case 1: return "null";
    case 2: return "boolean";
    case 3: return "number";
    case 4: return "string";
    default: return "object";
  }
}

std::string render_number(double d) {
  if (std::isnan(d)) return "NaN";
  if (std::isinf(d)) return d > 0 ? "Infinity" : "-Infinity";
  if (d == 0) return "0";

  std::string sign = d < 0 ? "-" : "";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, std::fabs(d),
                                 std::chars_format::scientific);
  std::string_view sci(buf, static_cast<std::size_t>(end - buf));
  auto e_at = sci.find('e');
  std::string digits;
  for (char c : sci.substr(0, e_at)) {
    if (c != '.') digits += c;
  }
  int exponent = 0;
  auto exp_text = sci.substr(e_at + 1);
  if (exp_text.front() == '+') exp_text.remove_prefix(1);
  std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);

  // Decimal point sits after `point` digits.
  const int k = static_cast<int>(digits.size());
  const int point = exponent + 1;
  if (k <= point && point <= 21) {
    return sign + digits + std::string(static_cast<std::size_t>(point - k), '0');
  }
  if (0 < point && point <= 21) {
    return sign + digits.substr(0, point) + "." + digits.substr(point);
  }
  if (-6 < point && point <= 0) {
    return sign + "0." + std::string(static_cast<std::size_t>(-point), '0') + digits;
  }
  std::string mantissa = digits.substr(0, 1);
  if (k > 1) mantissa += "." + digits.substr(1);
  int e = point - 1;
  return sign + mantissa + "e" + (e < 0 ? "-" : "+") + std::to_string(std::abs(e));
}

std::string render(const Value& v) {
  switch (v.index()) {
    case 0: return "undefined";
    case 1: return "null";
    case 2: return std::get<bool>(v) ? "true" : "false";
    case 3: return render_number(std::get<double>(v));
    case 4: return std::get<std::string>(v);
    default: return "[object]";
  }
}

std::string to_property_key(const Value& v) { return render(v); }

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

double parse_radix(std::string_view digits, int base) {
  if (digits.empty()) return std::numeric_limits<double>::quiet_NaN();
  double value = 0;
  for (char c : digits) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else return std::numeric_limits<double>::quiet_NaN();
    if (d >= base) return std::numeric_limits<double>::quiet_NaN();
    value = value * base + d;
  }
  return value;
}

// [+-] digits [. digits] [(e|E) [+-] digits], at least one mantissa digit.
bool is_decimal_literal(std::string_view s) {
  std::size_t i = 0;
  auto digit = [&](std::size_t at) { return at < s.size() && s[at] >= '0' && s[at] <= '9'; };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t mantissa_digits = 0;
  while (digit(i)) ++i, ++mantissa_digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (digit(i)) ++i, ++mantissa_digits;
  }
  if (mantissa_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (!digit(i)) return false;
    while (digit(i)) ++i;
  }
  return i == s.size();
}

}  // namespace

double string_to_number(std::string_view text) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  constexpr double inf = std::numeric_limits<double>::infinity();
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) return 0;
  if (text == "Infinity" || text == "+Infinity") return inf;
  if (text == "-Infinity") return -inf;
  if (text.size() > 2 && text[0] == '0') {
    switch (text[1]) {
      case 'x': case 'X': return parse_radix(text.substr(2), 16);
      case 'o': case 'O': return parse_radix(text.substr(2), 8);
      case 'b': case 'B': return parse_radix(text.substr(2), 2);
    }
  }
  if (!is_decimal_literal(text)) return nan;
  bool negative = text.front() == '-';
  if (text.front() == '+' || text.front() == '-') text.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) {
    bool tiny = text.find("e-") != std::string_view::npos ||
                text.find("E-") != std::string_view::npos;
    value = tiny ? 0.0 : inf;
  } else if (ec != std::errc()) {
    return nan;
  }
  return negative ? -value : value;
}

double to_number(const Value& v) {
  switch (v.index()) {
    case 0: return std::numeric_limits<double>::quiet_NaN();
    case 1: return 0;
    case 2: return std::get<bool>(v) ? 1 : 0;
    case 3: return std::get<double>(v);
    case 4: return string_to_number(std::get<std::string>(v));
    default: return std::numeric_limits<double>::quiet_NaN();
  }
}

bool truthy(const Value& v) {
  switch (v.index()) {
    case 0:
    case 1: return false;
    case 2: return std::get<bool>(v);
    case 3: {
      double d = std::get<double>(v);
      return d != 0 && !std::isnan(d);
    }
    case 4: return !std::get<std::string>(v).empty();
    default: return true;
  }
}

}  // namespace proxylang
