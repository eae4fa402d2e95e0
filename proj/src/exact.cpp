#include "llv/exact.hpp"

#include <cctype>

namespace llv {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string s = trim(text);
  const auto slash = s.find('/');
  const std::string num = trim(s.substr(0, slash));
  const std::string den = slash == std::string::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw InvalidInput("not a rational number: '" + text + "'");
  }
  BigInt n(num[0] == '+' ? num.substr(1) : num);
  BigInt d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
  return make_rational(n, d);
}

}  // namespace llv
