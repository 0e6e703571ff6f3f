#include <algorithm>
#include <cmath>
#include <vector>

#include "fictio/cubic.hpp"
#include "fictio/errors.hpp"
#include "fictio/quadratic.hpp"

// Exact-mode cubic machinery: all radicals here live in Q(sqrt(D)) for a
// single nonnegative rational D, so residuals can be expanded symbolically
// and compared with 0 instead of rounded.

namespace fictio {

namespace {

// a + b*sqrt(D)
struct Surd {
  Rational a, b;
};

Surd sadd(const Surd& x, const Surd& y) { return {x.a + y.a, x.b + y.b}; }
Surd ssub(const Surd& x, const Surd& y) { return {x.a - y.a, x.b - y.b}; }
Surd smul(const Surd& x, const Surd& y, const Rational& D) {
  return {x.a * y.a + x.b * y.b * D, x.a * y.b + x.b * y.a};
}
bool szero(const Surd& x) { return x.a == 0 && x.b == 0; }

// complex over Q(sqrt(D))
struct SurdC {
  Surd re, im;
};

SurdC cadd(const SurdC& x, const SurdC& y) { return {sadd(x.re, y.re), sadd(x.im, y.im)}; }
SurdC csub(const SurdC& x, const SurdC& y) { return {ssub(x.re, y.re), ssub(x.im, y.im)}; }
SurdC cmul(const SurdC& x, const SurdC& y, const Rational& D) {
  return {ssub(smul(x.re, y.re, D), smul(x.im, y.im, D)),
          sadd(smul(x.re, y.im, D), smul(x.im, y.re, D))};
}
bool czero(const SurdC& x) { return szero(x.re) && szero(x.im); }

SurdC from_exact_root(const ExactRoot& r) {
  return {{r.re_rational, r.re_surd}, {r.im_rational, r.im_surd}};
}

// x^3 - p x - q over Q(sqrt(D))[i]
bool cubic_residual_zero(const ExactRoot& root, const Rational& p, const Rational& q,
                         const Rational& D) {
  const SurdC x = from_exact_root(root);
  const SurdC x3 = cmul(cmul(x, x, D), x, D);
  const SurdC px = cmul(SurdC{{p, 0}, {0, 0}}, x, D);
  const SurdC res = csub(csub(x3, px), SurdC{{q, 0}, {0, 0}});
  return czero(res);
}

double surd_to_double(const Rational& a, const Rational& b, const Rational& D) {
  return rational_to_double(a) + rational_to_double(b) * std::sqrt(rational_to_double(D));
}

Cx exact_root_to_cx(const ExactRoot& r, const Rational& D) {
  return {surd_to_double(r.re_rational, r.re_surd, D),
          surd_to_double(r.im_rational, r.im_surd, D)};
}

bool height_within(const Rational& r, int bound) {
  return scalar_abs(Rational(numerator(r))) <= bound && denominator(r) <= bound;
}

// Same ordering the numeric solver uses (re desc, then im desc), applied to
// the certificate itself so certificate index i and numeric root index i
// always name the same root.
void sort_exact_roots(std::array<ExactRoot, 3>& roots, const Rational& D) {
  std::sort(roots.begin(), roots.end(), [&](const ExactRoot& x, const ExactRoot& y) {
    const Cx cx = exact_root_to_cx(x, D), cy = exact_root_to_cx(y, D);
    if (cx.re != cy.re) return cx.re > cy.re;
    return cx.im > cy.im;
  });
}

}  // namespace

std::optional<ComplexQuantity<Rational>> bombelli_extract_cbrt(
    const ComplexQuantity<Rational>& z, int search_bound) {
  if (search_bound < 1) throw DomainError("search bound must be positive");
  // |w|^6 = |z|^2, so a^2 + b^2 must be the exact rational cube root of |z|^2.
  const Rational norm = z.re * z.re + z.im * z.im;
  if (norm == 0) return ComplexQuantity<Rational>{0, 0};
  const auto r2 = rational_cbrt(norm);
  if (!r2) return std::nullopt;

  std::vector<ComplexQuantity<Rational>> hits;
  for (long den = 1; den <= search_bound; ++den) {
    for (long num = -search_bound; num <= search_bound; ++num) {
      if (boost::multiprecision::gcd(Int(num < 0 ? -num : num), Int(den)) != 1) continue;
      const Rational a(num, den);
      const Rational b2 = *r2 - a * a;
      if (b2 < 0) continue;
      const auto b = rational_sqrt(b2);
      if (!b || !height_within(*b, search_bound)) continue;
      for (int sign = 0; sign < (*b == 0 ? 1 : 2); ++sign) {
        const ComplexQuantity<Rational> w{a, sign == 0 ? *b : Rational(-*b)};
        const ComplexQuantity<Rational> w3 = w * w * w;
        if (w3.re == z.re && w3.im == z.im) hits.push_back(w);
      }
    }
  }
  if (hits.empty()) return std::nullopt;
  // Prefer a real candidate, then the smallest |im|, then the smallest |re|.
  auto better = [](const ComplexQuantity<Rational>& x, const ComplexQuantity<Rational>& y) {
    const Rational xi = scalar_abs(x.im), yi = scalar_abs(y.im);
    if (xi != yi) return xi < yi;
    const Rational xr = scalar_abs(x.re), yr = scalar_abs(y.re);
    if (xr != yr) return xr < yr;
    if (x.re != y.re) return x.re > y.re;
    return x.im > y.im;
  };
  return *std::min_element(hits.begin(), hits.end(), better);
}

CubicSolution solve_depressed_cubic_exact(const Rational& p, const Rational& q,
                                          int bombelli_bound) {
  CubicSolution sol = solve_depressed_cubic(rational_to_double(p), rational_to_double(q));
  const Rational disc = q * q / 4 - p * p * p / 27;
  sol.discriminant_term = rational_to_double(disc);
  sol.used_imaginaries = disc < 0;

  CubicExactCertificate cert;
  cert.p = p;
  cert.q = q;
  cert.discriminant = disc;
  bool have_cert = false;

  if (disc < 0) {
    sol.classification = CubicClass::ThreeRealIrreducible;
    // Radicand q/2 + i*sqrt(-disc) must itself be Gaussian rational for the
    // search to make sense.
    if (auto s = rational_sqrt(Rational(-disc))) {
      const ComplexQuantity<Rational> rad{q / 2, *s};
      if (auto w = bombelli_extract_cbrt(rad, bombelli_bound)) {
        // With u = a+bi and v = conj(u), the roots are 2a and -a -+ b*sqrt(3).
        const Rational a = w->re, b = w->im;
        cert.radicand = 3;
        cert.roots = {ExactRoot{2 * a, 0, 0, 0}, ExactRoot{-a, -b, 0, 0},
                      ExactRoot{-a, b, 0, 0}};
        cert.via_bombelli = true;
        cert.bombelli_root = *w;
        have_cert = true;
      }
    }
  } else if (disc == 0) {
    sol.classification = CubicClass::RepeatedRoot;
    if (auto u = rational_cbrt(Rational(q / 2))) {
      cert.radicand = 0;
      cert.roots = {ExactRoot{2 * *u, 0, 0, 0}, ExactRoot{-*u, 0, 0, 0},
                    ExactRoot{-*u, 0, 0, 0}};
      have_cert = true;
    }
  } else {
    sol.classification = CubicClass::OneRealTwoComplex;
    if (auto s = rational_sqrt(disc)) {
      const Rational w = q / 2 + *s;
      std::optional<Rational> u, v;
      if (w == 0) {
        // Then p = 0 and the cubic is x^3 = q.
        u = rational_cbrt(q);
        v = Rational(0);
      } else if (auto uc = rational_cbrt(w)) {
        u = uc;
        v = p / (3 * *uc);
      }
      if (u) {
        // Real root u+v; conjugate pair -(u+v)/2 +- i (u-v)/2 sqrt(3).
        const Rational sum = *u + *v, diff = *u - *v;
        cert.radicand = 3;
        cert.roots = {ExactRoot{sum, 0, 0, 0}, ExactRoot{-sum / 2, 0, 0, diff / 2},
                      ExactRoot{-sum / 2, 0, 0, -diff / 2}};
        have_cert = true;
      }
    }
  }

  if (have_cert) {
    cert.residuals_zero = true;
    for (const auto& r : cert.roots)
      cert.residuals_zero = cert.residuals_zero && cubic_residual_zero(r, p, q, cert.radicand);
    // The certificate is the better rendering: regenerate the numeric roots
    // from it so the report and the closed form agree to the last digit.
    sort_exact_roots(cert.roots, cert.radicand);
    for (std::size_t i = 0; i < 3; ++i) sol.roots[i] = exact_root_to_cx(cert.roots[i], cert.radicand);
    for (std::size_t i = 0; i < 3; ++i) {
      const Cx x = sol.roots[i];
      const Cx r = x * x * x - Cx{sol.p, 0} * x - Cx{sol.q, 0};
      sol.residuals[i] = complex_abs(r);
    }
    sol.exact = cert;
  }
  return sol;
}

GeneralCubicSolution solve_cubic_general_exact(const Rational& a, const Rational& b,
                                               const Rational& c, const Rational& d,
                                               int bombelli_bound) {
  auto dep = depress_cubic<Rational>(a, b, c, d);
  GeneralCubicSolution out;
  out.a = rational_to_double(a);
  out.b = rational_to_double(b);
  out.c = rational_to_double(c);
  out.d = rational_to_double(d);
  out.shift = rational_to_double(dep.shift);
  out.depressed = solve_depressed_cubic_exact(dep.p, dep.q, bombelli_bound);
  if (out.depressed.exact) {
    // Shifting by a rational keeps every root inside Q(sqrt(radicand)).
    auto& cert = *out.depressed.exact;
    for (auto& r : cert.roots) r.re_rational += dep.shift;
    cert.residuals_zero = true;
    // Residual check against the monic original: x^3 + Bx^2 + Cx + D.
    const Rational B = b / a, C = c / a, Dd = d / a;
    for (const auto& r : cert.roots) {
      const SurdC x = SurdC{{r.re_rational, r.re_surd}, {r.im_rational, r.im_surd}};
      const Rational& rd = cert.radicand;
      const SurdC x2 = cmul(x, x, rd);
      const SurdC x3 = cmul(x2, x, rd);
      SurdC res = cadd(x3, cmul(SurdC{{B, 0}, {0, 0}}, x2, rd));
      res = cadd(res, cmul(SurdC{{C, 0}, {0, 0}}, x, rd));
      res = cadd(res, SurdC{{Dd, 0}, {0, 0}});
      cert.residuals_zero = cert.residuals_zero && czero(res);
    }
    sort_exact_roots(cert.roots, cert.radicand);
    for (std::size_t i = 0; i < 3; ++i)
      out.roots[i] = exact_root_to_cx(cert.roots[i], cert.radicand);
  } else {
    for (std::size_t i = 0; i < 3; ++i)
      out.roots[i] = out.depressed.roots[i] + Cx{out.shift, 0.0};
    std::sort(out.roots.begin(), out.roots.end(), [](const Cx& x, const Cx& y) {
      if (x.re != y.re) return x.re > y.re;
      return x.im > y.im;
    });
  }
  const double B = out.b / out.a, C = out.c / out.a, D = out.d / out.a;
  for (std::size_t i = 0; i < 3; ++i) {
    const Cx x = out.roots[i];
    out.residuals[i] = complex_abs(x * x * x + Cx{B, 0} * x * x + Cx{C, 0} * x + Cx{D, 0});
  }
  return out;
}

bool quadratic_residuals_exactly_zero(const QuadraticSolution<Rational>& sol) {
  // Roots are axis +- sqrt(disc): components live in Q(sqrt(|disc|)).
  const Rational D = scalar_abs(sol.discriminant);
  SurdC r1, r2;
  if (sol.discriminant >= 0) {
    r1 = {{sol.axis, 1}, {0, 0}};
    r2 = {{sol.axis, -1}, {0, 0}};
  } else {
    r1 = {{sol.axis, 0}, {0, 1}};
    r2 = {{sol.axis, 0}, {0, -1}};
  }
  for (const SurdC& x : {r1, r2}) {
    SurdC res = cmul(x, x, D);
    res = cadd(res, cmul(SurdC{{sol.b, 0}, {0, 0}}, x, D));
    res = cadd(res, SurdC{{sol.c, 0}, {0, 0}});
    if (!czero(res)) return false;
  }
  return true;
}

}  // namespace fictio
