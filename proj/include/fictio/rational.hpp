#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace fictio {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "-3", "5/7", "3.25", "1e-3", "2.5e2".  Decimal text becomes the
// exact decimal fraction (0.1 -> 1/10), never the nearest binary64.
Rational rational_from_string(const std::string& text);

// "n" when the denominator is 1, otherwise "n/d".
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

// Exact roots; empty when the value is not a perfect square/cube in Q.
std::optional<Rational> rational_sqrt(const Rational& r);
std::optional<Rational> rational_cbrt(const Rational& r);

// Floor cube root of a nonnegative integer.
Int icbrt(const Int& n);

}  // namespace fictio
