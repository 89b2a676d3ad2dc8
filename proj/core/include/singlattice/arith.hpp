#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace singlattice {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor division rounding toward negative infinity. `den` must be nonzero.
Integer floor_div(const Integer& num, const Integer& den);
Integer ceil_div(const Integer& num, const Integer& den);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Largest s with s*s <= n, for n >= 0.
Integer isqrt(const Integer& n);

// Decimal text; rationals as `p/q` or `p` when integral.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

// Parses an optionally signed decimal integer of any length. Returns false
// on anything else (no surrounding whitespace allowed).
bool parse_integer(const std::string& text, Integer& out);

}  // namespace singlattice
