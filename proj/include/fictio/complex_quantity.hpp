#pragma once

#include <cmath>
#include <string>

#include "fictio/errors.hpp"
#include "fictio/scalar.hpp"

namespace fictio {

// Rectangular complex quantity over either scalar mode.  The exact mode keeps
// Gaussian rationals closed under +,-,*,/; roots that leave the rationals are
// handled by the solvers, not here.
template <typename S>
struct ComplexQuantity {
  S re{};
  S im{};

  ComplexQuantity() = default;
  ComplexQuantity(S r, S i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return scalar_is_zero(im); }

  ComplexQuantity conj() const { return {re, -im}; }

  friend ComplexQuantity operator+(const ComplexQuantity& a, const ComplexQuantity& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexQuantity operator-(const ComplexQuantity& a, const ComplexQuantity& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexQuantity operator-(const ComplexQuantity& a) { return {-a.re, -a.im}; }
  friend ComplexQuantity operator*(const ComplexQuantity& a, const ComplexQuantity& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexQuantity operator/(const ComplexQuantity& a, const ComplexQuantity& b) {
    S n = b.re * b.re + b.im * b.im;
    if (scalar_is_zero(n)) throw DivisionByZero("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }

  std::string str() const {
    std::string s = scalar_format(re);
    if (!scalar_is_zero(im)) {
      s += scalar_sign(im) < 0 ? " - " : " + ";
      s += scalar_format(scalar_abs(im)) + "i";
    }
    return s;
  }
};

using Cx = ComplexQuantity<double>;

inline double complex_abs(const Cx& z) { return std::hypot(z.re, z.im); }

// Principal value: magnitude root, argument divided by three.  The argument
// convention is atan2's (-pi, pi], so the principal root has argument in
// (-pi/3, pi/3].
inline Cx complex_cbrt_principal(const Cx& z) {
  const double r = complex_abs(z);
  if (r == 0.0) return {0.0, 0.0};
  const double theta = std::atan2(z.im, z.re) / 3.0;
  return {std::cbrt(r) * std::cos(theta), std::cbrt(r) * std::sin(theta)};
}

inline Cx complex_sqrt_principal(const Cx& z) {
  const double r = complex_abs(z);
  const double theta = std::atan2(z.im, z.re) / 2.0;
  return {std::sqrt(r) * std::cos(theta), std::sqrt(r) * std::sin(theta)};
}

}  // namespace fictio
