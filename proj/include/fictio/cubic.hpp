#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fictio/complex_quantity.hpp"
#include "fictio/rational.hpp"
#include "fictio/scalar.hpp"

namespace fictio {

// --- depressing the general cubic -----------------------------------------

// a x^3 + b x^2 + c x + d = 0 rewritten as t^3 = p t + q via x = t + shift,
// shift = -b/(3a), after normalizing by a.
template <typename S>
struct DepressedCubic {
  S p, q, shift;
};

template <typename S>
DepressedCubic<S> depress_cubic(const S& a, const S& b, const S& c, const S& d) {
  if (scalar_is_zero(a)) throw DomainError("leading coefficient must be nonzero");
  const S B = b / a, C = c / a, D = d / a;
  const S s = -B / S(3);
  DepressedCubic<S> out;
  out.shift = s;
  out.p = -(S(3) * s * s + S(2) * B * s + C);
  out.q = -(s * s * s + B * s * s + C * s + D);
  return out;
}

// --- solving t^3 = p t + q --------------------------------------------------

enum class CubicClass { ThreeRealIrreducible, OneRealTwoComplex, RepeatedRoot };

inline const char* cubic_class_name(CubicClass c) {
  switch (c) {
    case CubicClass::ThreeRealIrreducible: return "three-distinct-real-irreducible";
    case CubicClass::OneRealTwoComplex: return "one-real-two-complex";
    case CubicClass::RepeatedRoot: return "repeated-root";
  }
  return "?";
}

// One real root of the exact certificate: (re_rational + re_surd*sqrt(radicand))
// + i (im_rational + im_surd*sqrt(radicand)).
struct ExactRoot {
  Rational re_rational, re_surd;
  Rational im_rational, im_surd;
};

// Produced when the radical tower stays inside Q (or Q(sqrt(radicand))):
// exact discriminant, closed-form roots, and residuals verified to vanish by
// exact expansion.
struct CubicExactCertificate {
  Rational p, q;
  Rational discriminant;  // q^2/4 - p^3/27
  Rational radicand;      // 0 when every component is rational
  std::array<ExactRoot, 3> roots;
  bool residuals_zero = false;
  bool via_bombelli = false;
  std::optional<ComplexQuantity<Rational>> bombelli_root;  // extracted a+bi
};

struct CubicSolution {
  double p = 0, q = 0;
  std::array<Cx, 3> roots{};  // sorted by re desc, then im desc
  double discriminant_term = 0;  // q^2/4 - p^3/27
  CubicClass classification = CubicClass::OneRealTwoComplex;
  bool used_imaginaries = false;  // <=> discriminant_term < 0
  std::array<double, 3> residuals{};  // |x^3 - p x - q| at each root
  std::optional<CubicExactCertificate> exact;
};

CubicSolution solve_depressed_cubic(double p, double q);

// Exact-mode entry: numeric rendering plus an exact certificate whenever the
// radicals stay rational (Bombelli's search resolves the casus irreducibilis;
// otherwise the solver falls back to the polar cube root for the rendering).
CubicSolution solve_depressed_cubic_exact(const Rational& p, const Rational& q,
                                          int bombelli_bound = 64);

// --- the general cubic ------------------------------------------------------

struct GeneralCubicSolution {
  double a = 0, b = 0, c = 0, d = 0;
  double shift = 0;
  CubicSolution depressed;
  std::array<Cx, 3> roots{};          // depressed roots + shift, re-sorted
  std::array<double, 3> residuals{};  // of the monic normalized cubic
};

GeneralCubicSolution solve_cubic_general(double a, double b, double c, double d);
GeneralCubicSolution solve_cubic_general_exact(const Rational& a, const Rational& b,
                                               const Rational& c, const Rational& d,
                                               int bombelli_bound = 64);

// --- Bombelli's rational cube root search ----------------------------------

// Searches for w = a+bi with numerators and denominators bounded by
// search_bound such that w^3 = z exactly.  Tie-break: prefer a real
// candidate, then the smallest |imaginary part|, then the smallest |real
// part|.  Empty when no candidate exists within the bound.
std::optional<ComplexQuantity<Rational>> bombelli_extract_cbrt(
    const ComplexQuantity<Rational>& z, int search_bound = 64);

// --- angle trisection via the irreducible cubic -----------------------------

// chord(3*theta) given, chord(theta) wanted: solves x^3 = 3x - chord and takes
// the smallest positive root.  chord must lie in (0, 2]; every chord < 2
// drives the solver through the imaginary radicand.
struct TrisectionResult {
  double chord = 0;
  double trisected_chord = 0;
  CubicSolution cubic;
};

TrisectionResult girard_trisect(double chord);

// --- proportion sanity check (negatives) ------------------------------------

// a : b = c : d formally means a*d = b*c; the order intuition expects a vs b
// to compare the way c vs d does.  Negatives split the two readings apart.
template <typename S>
struct ProportionReport {
  S a, b, c, d;
  bool formal_holds = false;
  bool intuition_consistent = false;
  bool paradox = false;
};

template <typename S>
ProportionReport<S> check_proportion(const S& a, const S& b, const S& c, const S& d) {
  if (scalar_is_zero(b) || scalar_is_zero(d))
    throw DomainError("proportion needs nonzero consequents");
  ProportionReport<S> r{a, b, c, d, false, false, false};
  r.formal_holds = scalar_is_zero(a * d - b * c);
  r.intuition_consistent = scalar_sign(a - b) == scalar_sign(c - d);
  r.paradox = r.formal_holds && !r.intuition_consistent;
  return r;
}

// Quadratic surd-form residual check used by the exact-mode tests: expands
// x^2 + b x + c at both roots inside Q(sqrt(|disc|)) and reports whether the
// residuals vanish identically.
template <typename S>
struct QuadraticSolution;
bool quadratic_residuals_exactly_zero(const QuadraticSolution<Rational>& sol);

}  // namespace fictio
