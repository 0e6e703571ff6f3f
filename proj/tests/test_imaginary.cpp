#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "fictio/complex_quantity.hpp"
#include "fictio/cubic.hpp"
#include "fictio/errors.hpp"
#include "fictio/quadratic.hpp"
#include "fictio/rational.hpp"
#include "support/oracles.hpp"

using fictio::ComplexQuantity;
using fictio::CubicClass;
using fictio::Cx;
using fictio::Rational;
namespace ft = fictio::testing;

TEST_CASE("divide ten into parts with product forty") {
  const auto sol = fictio::solve_quadratic<Rational>(Rational(-10), Rational(40));
  CHECK(sol.axis == 5);
  CHECK(sol.discriminant == -15);
  CHECK(sol.imaginary);
  CHECK(sol.sum() == 10);
  CHECK(sol.product() == 40);
  CHECK(fictio::quadratic_residuals_exactly_zero(sol));
  const auto roots = sol.roots();
  CHECK(roots[0].re == doctest::Approx(5.0));
  CHECK(roots[0].im == doctest::Approx(std::sqrt(15.0)));
  CHECK(roots[1].im == doctest::Approx(-std::sqrt(15.0)));
}

TEST_CASE("real quadratics keep exact Vieta sums and products") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 200; ++i) {
    const Rational b = ft::random_rational(rng, 50, 20);
    const Rational c = ft::random_rational(rng, 50, 20);
    const auto sol = fictio::solve_quadratic<Rational>(b, c);
    CHECK(sol.sum() == -b);
    CHECK(sol.product() == c);
    CHECK(sol.imaginary == (sol.discriminant < 0));
    CHECK(fictio::quadratic_residuals_exactly_zero(sol));
    for (double r : sol.residuals()) CHECK(r <= 1e-9);
  }
  const auto simple = fictio::solve_quadratic<Rational>(Rational(-3), Rational(2));
  CHECK(simple.roots()[0].re == doctest::Approx(2.0));
  CHECK(simple.roots()[1].re == doctest::Approx(1.0));
}

TEST_CASE("the irreducible cubic t^3 = 15t + 4 resolves through imaginaries") {
  const auto sol = fictio::solve_depressed_cubic_exact(Rational(15), Rational(4));
  CHECK(sol.used_imaginaries);
  CHECK(sol.classification == CubicClass::ThreeRealIrreducible);
  CHECK(sol.discriminant_term == doctest::Approx(-121.0));
  CHECK(sol.roots[0].re == doctest::Approx(4.0));
  CHECK(sol.roots[1].re == doctest::Approx(-2.0 + std::sqrt(3.0)));
  CHECK(sol.roots[2].re == doctest::Approx(-2.0 - std::sqrt(3.0)));
  for (double r : sol.residuals) CHECK(r <= 1e-9);

  REQUIRE(sol.exact.has_value());
  const auto& cert = *sol.exact;
  CHECK(cert.discriminant == -121);
  CHECK(cert.radicand == 3);
  CHECK(cert.residuals_zero);
  CHECK(cert.via_bombelli);
  REQUIRE(cert.bombelli_root.has_value());
  CHECK(cert.bombelli_root->re == 2);
  CHECK(cert.bombelli_root->im == 1);
  // Certificate rows line up with the numeric rendering: 4, -2+sqrt3, -2-sqrt3.
  CHECK(cert.roots[0].re_rational == 4);
  CHECK(cert.roots[0].re_surd == 0);
  CHECK(cert.roots[1].re_rational == -2);
  CHECK(cert.roots[1].re_surd == 1);
  CHECK(cert.roots[2].re_surd == -1);
}

TEST_CASE("a cubic with one real root keeps its complex pair exact") {
  // t^3 = 8: real root 2, complex pair -1 +- sqrt(3) i.
  const auto sol = fictio::solve_depressed_cubic_exact(Rational(0), Rational(8));
  CHECK(!sol.used_imaginaries);
  CHECK(sol.classification == CubicClass::OneRealTwoComplex);
  REQUIRE(sol.exact.has_value());
  const auto& cert = *sol.exact;
  CHECK(cert.residuals_zero);
  CHECK(cert.radicand == 3);
  CHECK(cert.roots[0].re_rational == 2);
  CHECK(cert.roots[0].im_rational == 0);
  CHECK(cert.roots[1].re_rational == -1);
  CHECK(cert.roots[1].im_surd == 1);
  CHECK(cert.roots[2].re_rational == -1);
  CHECK(cert.roots[2].im_surd == -1);
}

TEST_CASE("bombelli's cube root") {
  const ComplexQuantity<Rational> z{Rational(2), Rational(11)};
  const auto w = fictio::bombelli_extract_cbrt(z);
  REQUIRE(w.has_value());
  CHECK(w->re == 2);
  CHECK(w->im == 1);

  const auto wm = fictio::bombelli_extract_cbrt({Rational(2), Rational(-11)});
  REQUIRE(wm.has_value());
  CHECK(wm->re == 2);
  CHECK(wm->im == -1);

  // Norm 2 is not a perfect cube, so there is no rational cube root at all.
  CHECK(!fictio::bombelli_extract_cbrt({Rational(1), Rational(1)}).has_value());
}

TEST_CASE("bombelli round-trips random rational cubes") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  int found = 0;
  for (int i = 0; i < 20; ++i) {
    const ComplexQuantity<Rational> w{Rational(num(rng), den(rng)),
                                      Rational(num(rng), den(rng))};
    if (w.re == 0 && w.im == 0) continue;
    const auto z = w * w * w;
    const auto back = fictio::bombelli_extract_cbrt(z, 64);
    REQUIRE(back.has_value());
    CHECK(back->re == w.re);
    CHECK(back->im == w.im);
    ++found;
  }
  CHECK(found >= 15);  // the loop really exercised the search
}

TEST_CASE("general cubics agree with depress-then-solve") {
  // x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3), and its doubled form.
  for (double a : {1.0, 2.0}) {
    const auto sol = fictio::solve_cubic_general(a, -6 * a, 11 * a, -6 * a);
    CHECK(sol.shift == doctest::Approx(2.0));
    CHECK(sol.depressed.p == doctest::Approx(1.0));
    CHECK(sol.depressed.q == doctest::Approx(0.0));
    CHECK(sol.roots[0].re == doctest::Approx(3.0));
    CHECK(sol.roots[1].re == doctest::Approx(2.0));
    CHECK(sol.roots[2].re == doctest::Approx(1.0));
    for (double r : sol.residuals) CHECK(r <= 1e-9);
  }

  std::mt19937_64 rng(20260817);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int i = 0; i < 200; ++i) {
    int a = coeff(rng);
    while (a == 0) a = coeff(rng);
    const int b = coeff(rng), c = coeff(rng), d = coeff(rng);
    const auto sol = fictio::solve_cubic_general(a, b, c, d);
    for (const auto& root : sol.roots) {
      CHECK(std::isfinite(root.re));
      CHECK(std::isfinite(root.im));
    }
    for (double r : sol.residuals) CHECK(r <= 1e-9);

    // Independent route: depress exactly in rationals, solve, shift back.
    const auto dep = fictio::depress_cubic<Rational>(Rational(a), Rational(b), Rational(c),
                                                     Rational(d));
    const auto depressed = fictio::solve_depressed_cubic(fictio::rational_to_double(dep.p),
                                                         fictio::rational_to_double(dep.q));
    std::array<Cx, 3> shifted = depressed.roots;
    const double shift = fictio::rational_to_double(dep.shift);
    for (auto& root : shifted) root.re += shift;
    auto key = [](const Cx& z) { return std::make_pair(z.re, z.im); };
    std::array<Cx, 3> got = sol.roots;
    std::sort(got.begin(), got.end(), [&](const Cx& u, const Cx& v) { return key(u) < key(v); });
    std::sort(shifted.begin(), shifted.end(),
              [&](const Cx& u, const Cx& v) { return key(u) < key(v); });
    for (int k = 0; k < 3; ++k) {
      CHECK(got[k].re == doctest::Approx(shifted[k].re).epsilon(1e-9).scale(1.0));
      CHECK(got[k].im == doctest::Approx(shifted[k].im).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("trisection matches chord trigonometry") {
  for (double deg : {30.0, 60.0, 90.0, 120.0, 170.0}) {
    const double theta = ft::degrees(deg);
    const auto t = fictio::girard_trisect(ft::chord_of(theta));
    CHECK(std::abs(t.trisected_chord - ft::chord_of(theta / 3)) <= 1e-9);
    CHECK(t.cubic.used_imaginaries);  // every proper chord < 2 passes through i
    for (double r : t.cubic.residuals) CHECK(r <= 1e-9);
  }

  // The straight angle is the boundary: chord 2 trisects to chord(60) = 1
  // through a repeated root, with no imaginary detour.
  const auto straight = fictio::girard_trisect(2.0);
  CHECK(straight.trisected_chord == doctest::Approx(1.0));
  CHECK(!straight.cubic.used_imaginaries);

  CHECK_THROWS_AS((void)fictio::girard_trisect(0.0), fictio::DomainError);
  CHECK_THROWS_AS((void)fictio::girard_trisect(2.5), fictio::DomainError);
  CHECK_THROWS_AS((void)fictio::girard_trisect(-1.0), fictio::DomainError);
}

TEST_CASE("proportions of negatives: formally sound, intuitively paradoxical") {
  const auto r = fictio::check_proportion<Rational>(Rational(1), Rational(-4), Rational(-5),
                                                    Rational(20));
  CHECK(r.formal_holds);
  CHECK(!r.intuition_consistent);
  CHECK(r.paradox);

  const auto plain = fictio::check_proportion<Rational>(Rational(2), Rational(4), Rational(3),
                                                        Rational(6));
  CHECK(plain.formal_holds);
  CHECK(plain.intuition_consistent);
  CHECK(!plain.paradox);

  const auto broken = fictio::check_proportion<Rational>(Rational(1), Rational(2), Rational(3),
                                                         Rational(5));
  CHECK(!broken.formal_holds);
  CHECK(!broken.paradox);

  CHECK_THROWS_AS(
      (void)fictio::check_proportion<Rational>(Rational(1), Rational(0), Rational(1), Rational(1)),
      fictio::DomainError);
}
