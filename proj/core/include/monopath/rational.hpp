#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace monopath {

// Exact arithmetic throughout: path and arborescence counts overflow 64 bits
// well inside the supported parameter ranges, and functional values must
// compare exactly (ties are errors, never noise).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" when the reduced denominator is 1, else "p/q"
// with q > 0. This is the only form the JSON layer emits.
std::string rational_to_string(const Rational& r);

// Accepts "p" or "p/q" with optional leading '-'. Throws ParseError on
// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

std::string bigint_to_string(const BigInt& v);
BigInt parse_bigint(const std::string& text);

}  // namespace monopath
