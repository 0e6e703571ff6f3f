#pragma once

#include <array>

#include "fictio/complex_quantity.hpp"
#include "fictio/scalar.hpp"

namespace fictio {

// Roots of x^2 + b x + c = 0 by completing the square: axis +- sqrt(disc)
// with axis = -b/2 and disc = b^2/4 - c.  The surd form is the primary
// result; in exact mode the root pair's sum (2*axis) and product
// (axis^2 - disc) are exact rationals even when the components are
// irrational, which is what makes identities like
// (5 + sqrt(-15)) (5 - sqrt(-15)) = 40 checkable without rounding.
template <typename S>
struct QuadraticSolution {
  S b, c;            // inputs, x^2 + b x + c
  S axis;            // -b/2
  S discriminant;    // b^2/4 - c; roots are axis +- sqrt(discriminant)
  bool imaginary;    // discriminant < 0

  S sum() const { return axis + axis; }
  S product() const { return axis * axis - discriminant; }

  // binary64 rendering, ordered [axis + sqrt(d), axis - sqrt(d)].
  std::array<Cx, 2> roots() const {
    const double a = scalar_to_double(axis);
    const double d = scalar_to_double(discriminant);
    if (d >= 0) {
      const double s = std::sqrt(d);
      return {Cx{a + s, 0.0}, Cx{a - s, 0.0}};
    }
    const double s = std::sqrt(-d);
    return {Cx{a, s}, Cx{a, -s}};
  }

  std::array<double, 2> residuals() const {
    const double bd = scalar_to_double(b), cd = scalar_to_double(c);
    std::array<double, 2> out{};
    auto rs = roots();
    for (int i = 0; i < 2; ++i) {
      Cx x = rs[static_cast<std::size_t>(i)];
      Cx r = x * x + Cx{bd, 0.0} * x + Cx{cd, 0.0};
      out[static_cast<std::size_t>(i)] = complex_abs(r);
    }
    return out;
  }
};

template <typename S>
QuadraticSolution<S> solve_quadratic(const S& b, const S& c) {
  QuadraticSolution<S> sol;
  sol.b = b;
  sol.c = c;
  sol.axis = -b / S(2);
  sol.discriminant = b * b / S(4) - c;
  sol.imaginary = scalar_sign(sol.discriminant) < 0;
  return sol;
}

}  // namespace fictio
