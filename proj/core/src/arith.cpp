#include "singlattice/arith.hpp"

#include "singlattice/errors.hpp"

namespace singlattice {

Integer floor_div(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("floor_div: zero denominator");
  Integer q = num / den;  // truncates toward zero
  Integer r = num - q * den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  return -floor_div(-num, den);
}

Integer floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q),
                   boost::multiprecision::denominator(q));
}

Integer ceil(const Rational& q) {
  return ceil_div(boost::multiprecision::numerator(q),
                  boost::multiprecision::denominator(q));
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw PreconditionError("isqrt: negative argument");
  if (n < 2) return n;
  return boost::multiprecision::sqrt(n);
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const Integer& den = boost::multiprecision::denominator(v);
  if (den == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

bool parse_integer(const std::string& text, Integer& out) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') return false;
  }
  out = Integer(text.substr(i));
  if (text[0] == '-') out = -out;
  return true;
}

}  // namespace singlattice
