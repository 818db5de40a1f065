#include "revaudit/rational.h"

#include <stdexcept>

namespace revaudit {
namespace {

bool IsIntegerLiteral(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den) ||
      (slash != std::string_view::npos && (den.front() == '-' ||
                                           den.front() == '+'))) {
    throw std::invalid_argument("not a rational literal (expected p/q): \"" +
                                std::string(text) + "\"");
  }
  const BigInt d = ParseInteger(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in \"" + std::string(text) +
                                "\"");
  }
  return Rational(ParseInteger(num), d);
}

std::string ToString(const Rational& value) { return value.str(); }

}  // namespace revaudit
