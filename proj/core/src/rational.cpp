#include "monopath/rational.hpp"

#include <cctype>

#include "monopath/errors.hpp"

namespace monopath {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw ParseError("not a rational: '" + text + "'");
    }
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw ParseError("not a rational: '" + text + "'");
  }
  const BigInt d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(BigInt(num), d);
}

std::string bigint_to_string(const BigInt& v) { return v.str(); }

BigInt parse_bigint(const std::string& text) {
  if (!is_integer_token(text)) {
    throw ParseError("not an integer: '" + text + "'");
  }
  return BigInt(text);
}

}  // namespace monopath
