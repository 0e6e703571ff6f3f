#include "fictio/cubic.hpp"

#include <algorithm>
#include <cmath>

#include "fictio/errors.hpp"

namespace fictio {

namespace {

bool root_before(const Cx& x, const Cx& y) {
  if (x.re != y.re) return x.re > y.re;
  return x.im > y.im;
}

double residual_at(double p, double q, const Cx& x) {
  Cx r = x * x * x - Cx{p, 0} * x - Cx{q, 0};
  return complex_abs(r);
}

void finish(CubicSolution& sol) {
  std::sort(sol.roots.begin(), sol.roots.end(), root_before);
  for (std::size_t i = 0; i < 3; ++i)
    sol.residuals[i] = residual_at(sol.p, sol.q, sol.roots[i]);
  // Numeric repeated-root detection: clustering within 1e-7.
  if (sol.classification != CubicClass::RepeatedRoot) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (complex_abs(sol.roots[i] - sol.roots[j]) < 1e-7)
          sol.classification = CubicClass::RepeatedRoot;
  }
}

}  // namespace

CubicSolution solve_depressed_cubic(double p, double q) {
  if (!std::isfinite(p) || !std::isfinite(q))
    throw DomainError("cubic coefficients must be finite");
  CubicSolution sol;
  sol.p = p;
  sol.q = q;
  sol.discriminant_term = q * q / 4 - p * p * p / 27;
  sol.used_imaginaries = sol.discriminant_term < 0;

  const double half_q = q / 2;
  if (sol.discriminant_term < 0) {
    // Casus irreducibilis: the radicand is imaginary yet all three roots are
    // real, so the imaginary parts provably cancel and we keep only Re.
    const Cx rad{half_q, std::sqrt(-sol.discriminant_term)};
    const Cx u = complex_cbrt_principal(rad);
    const Cx v = Cx{p / 3, 0} / u;  // conjugate pairing: u*v = p/3 by construction
    const Cx omega{-0.5, std::sqrt(3.0) / 2}, omega2{-0.5, -std::sqrt(3.0) / 2};
    sol.roots = {Cx{(u + v).re, 0.0}, Cx{(omega * u + omega2 * v).re, 0.0},
                 Cx{(omega2 * u + omega * v).re, 0.0}};
    sol.classification = CubicClass::ThreeRealIrreducible;
  } else if (sol.discriminant_term == 0) {
    const double u = std::cbrt(half_q);
    sol.roots = {Cx{2 * u, 0.0}, Cx{-u, 0.0}, Cx{-u, 0.0}};
    sol.classification = CubicClass::RepeatedRoot;
  } else {
    const double s = std::sqrt(sol.discriminant_term);
    // cbrt of whichever of q/2 +- s is larger in magnitude avoids cancellation.
    const double w1 = half_q + s, w2 = half_q - s;
    const double u = std::cbrt(std::fabs(w1) >= std::fabs(w2) ? w1 : w2);
    const double v = u != 0 ? p / (3 * u) : 0.0;
    const double re = -(u + v) / 2, im = (u - v) * std::sqrt(3.0) / 2;
    sol.roots = {Cx{u + v, 0.0}, Cx{re, std::fabs(im)}, Cx{re, -std::fabs(im)}};
    sol.classification = CubicClass::OneRealTwoComplex;
  }
  finish(sol);
  return sol;
}

GeneralCubicSolution solve_cubic_general(double a, double b, double c, double d) {
  GeneralCubicSolution out;
  out.a = a;
  out.b = b;
  out.c = c;
  out.d = d;
  auto dep = depress_cubic<double>(a, b, c, d);
  out.shift = dep.shift;
  out.depressed = solve_depressed_cubic(dep.p, dep.q);
  for (std::size_t i = 0; i < 3; ++i)
    out.roots[i] = out.depressed.roots[i] + Cx{dep.shift, 0.0};
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Cx& x, const Cx& y) { return root_before(x, y); });
  const double B = b / a, C = c / a, D = d / a;
  for (std::size_t i = 0; i < 3; ++i) {
    const Cx x = out.roots[i];
    out.residuals[i] = complex_abs(x * x * x + Cx{B, 0} * x * x + Cx{C, 0} * x + Cx{D, 0});
  }
  return out;
}

TrisectionResult girard_trisect(double chord) {
  if (!(chord > 0.0) || chord > 2.0)
    throw DomainError("chord must lie in (0, 2]");
  TrisectionResult out;
  out.chord = chord;
  out.cubic = solve_depressed_cubic(3.0, -chord);
  double best = 0;
  bool have = false;
  for (const Cx& r : out.cubic.roots) {
    if (r.im != 0.0 || r.re <= 0) continue;
    if (!have || r.re < best) {
      best = r.re;
      have = true;
    }
  }
  if (!have) throw DomainError("no positive real root for the trisection cubic");
  out.trisected_chord = best;
  return out;
}

}  // namespace fictio
