#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "fictio/rational.hpp"

// Overload set that lets the field/solver templates treat binary64 and exact
// rationals uniformly.  "exact" scalars compare and cancel exactly; numeric
// scalars round.

namespace fictio {

template <typename S>
inline constexpr bool scalar_is_exact_v = false;
template <>
inline constexpr bool scalar_is_exact_v<Rational> = true;

inline bool scalar_is_zero(double v) { return v == 0.0; }
inline bool scalar_is_zero(long double v) { return v == 0.0L; }
inline bool scalar_is_zero(const Rational& v) { return v == 0; }

inline double scalar_abs(double v) { return std::fabs(v); }
inline long double scalar_abs(long double v) { return std::fabs(v); }
inline Rational scalar_abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

inline int scalar_sign(double v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }
inline int scalar_sign(long double v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }
inline int scalar_sign(const Rational& v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

inline double scalar_to_double(double v) { return v; }
inline double scalar_to_double(const Rational& v) { return rational_to_double(v); }

template <typename S>
S scalar_from_rational(const Rational& r);
template <>
inline double scalar_from_rational<double>(const Rational& r) {
  return rational_to_double(r);
}
template <>
inline Rational scalar_from_rational<Rational>(const Rational& r) {
  return r;
}

// From binary64 into the scalar type.  The rational conversion is exact:
// every finite double is a dyadic rational.
template <typename S>
S scalar_from_plain_double(double v);
template <>
inline double scalar_from_plain_double<double>(double v) {
  return v;
}
template <>
inline Rational scalar_from_plain_double<Rational>(double v) {
  return Rational(v);
}

template <typename S>
S scalar_from_int(long v);
template <>
inline double scalar_from_int<double>(long v) {
  return static_cast<double>(v);
}
template <>
inline Rational scalar_from_int<Rational>(long v) {
  return Rational(v);
}

// Square root within the scalar type itself: empty when the type cannot
// represent it (negative input, or a rational that is not a perfect square).
inline std::optional<double> scalar_sqrt(double v) {
  if (v < 0) return std::nullopt;
  return std::sqrt(v);
}
inline std::optional<Rational> scalar_sqrt(const Rational& v) {
  return rational_sqrt(v);
}

// 15 significant digits for binary64, n/d for rationals: the shared format
// every report and the CLI use.
inline std::string scalar_format(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}
inline std::string scalar_format(const Rational& v) { return rational_to_string(v); }

}  // namespace fictio
