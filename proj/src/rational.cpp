#include "fictio/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "fictio/errors.hpp"

namespace fictio {

namespace {

Int ipow10(long e) {
  Int r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::size_t i = 0, n = text.size();
  while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = n;
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (i == end) throw DomainError("empty numeric literal");

  std::string s = text.substr(i, end - i);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational num = rational_from_string(s.substr(0, slash));
    Rational den = rational_from_string(s.substr(slash + 1));
    if (den == 0) throw DivisionByZero("denominator is zero in '" + s + "'");
    return num / den;
  }

  bool neg = false;
  std::size_t p = 0;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
    neg = s[p] == '-';
    ++p;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; p < s.size(); ++p) {
    char c = s[p];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      break;
    } else {
      throw DomainError("bad numeric literal '" + s + "'");
    }
  }
  if (!seen_digit) throw DomainError("bad numeric literal '" + s + "'");

  long exp10 = 0;
  if (p < s.size()) {  // at 'e'/'E'
    ++p;
    bool eneg = false;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
      eneg = s[p] == '-';
      ++p;
    }
    if (p == s.size()) throw DomainError("bad exponent in '" + s + "'");
    for (; p < s.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(s[p])))
        throw DomainError("bad exponent in '" + s + "'");
      exp10 = exp10 * 10 + (s[p] - '0');
      if (exp10 > 100000) throw RangeError("exponent out of range in '" + s + "'");
    }
    if (eneg) exp10 = -exp10;
  }

  // boost reads a leading 0 as an octal prefix; these digits are decimal.
  const auto nz = digits.find_first_not_of('0');
  Int mantissa(nz == std::string::npos ? std::string("0") : digits.substr(nz));
  Rational r(mantissa);
  long shift = exp10 - frac_digits;
  if (shift > 0)
    r *= ipow10(shift);
  else if (shift < 0)
    r /= ipow10(-shift);
  return neg ? -r : r;
}

std::string rational_to_string(const Rational& r) {
  const Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Int num = numerator(r), den = denominator(r);
  Int sn = boost::multiprecision::sqrt(num);
  Int sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

Int icbrt(const Int& n) {
  if (n < 0) throw DomainError("icbrt of a negative integer");
  if (n == 0) return 0;
  // Newton iteration with a crude upper start; exact floor at the end.
  Int x = Int(1) << static_cast<unsigned>(msb(n) / 3 + 2);
  while (true) {
    Int y = (2 * x + n / (x * x)) / 3;
    if (y >= x) break;
    x = y;
  }
  while (x * x * x > n) --x;
  return x;
}

std::optional<Rational> rational_cbrt(const Rational& r) {
  const bool neg = r < 0;
  const Rational a = neg ? Rational(-r) : r;
  const Int num = numerator(a), den = denominator(a);
  Int cn = icbrt(num), cd = icbrt(den);
  if (cn * cn * cn != num || cd * cd * cd != den) return std::nullopt;
  Rational root(cn, cd);
  return neg ? Rational(-root) : root;
}

}  // namespace fictio
