#include <doctest.h>

#include <cmath>
#include <string>

#include "fictio/errors.hpp"
#include "fictio/evaluate.hpp"
#include "fictio/expression.hpp"
#include "fictio/quadrature.hpp"
#include "fictio/rational.hpp"

using fictio::integrate;

TEST_CASE("smooth integrands to full tolerance") {
  CHECK(integrate([](double x) { return x * x; }, 0, 1) == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(integrate([](double x) { return 4 / (1 + x * x); }, 0, 1) ==
        doctest::Approx(std::acos(-1.0)).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::sin(x); }, 0, std::acos(-1.0)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::exp(x); }, 0, 1) ==
        doctest::Approx(std::exp(1.0) - 1).epsilon(1e-12));
}

TEST_CASE("orientation and degenerate spans") {
  CHECK(integrate([](double x) { return x; }, 2, 2) == 0.0);
  CHECK(integrate([](double x) { return x; }, 1, 0) == doctest::Approx(-0.5));
}

TEST_CASE("inverse-square-root endpoint singularities") {
  // These blow up at an endpoint yet integrate finitely.
  CHECK(integrate([](double x) { return 1 / std::sqrt(x); }, 0, 1) ==
        doctest::Approx(2.0).epsilon(1e-6));
  CHECK(integrate([](double x) { return 1 / std::sqrt(1 - x); }, 0, 1) ==
        doctest::Approx(2.0).epsilon(1e-6));
  CHECK(integrate([](double x) { return 1 / std::sqrt(1 - x * x); }, -1, 1) ==
        doctest::Approx(std::acos(-1.0)).epsilon(1e-6));
  // The cycloid arc-length integrand: integral from 0 to 1 is pi/2.
  CHECK(integrate([](double x) { return 1 / std::sqrt(2 * x - x * x); }, 0, 1) ==
        doctest::Approx(std::acos(-1.0) / 2).epsilon(1e-6));
}

TEST_CASE("harder singularities are refused, not mis-summed") {
  CHECK_THROWS_AS((void)integrate([](double x) { return 1 / x; }, 0, 1), fictio::QuadratureError);
  CHECK_THROWS_AS((void)integrate([](double x) { return 1 / (x * x); }, 0, 1),
                  fictio::QuadratureError);
}

TEST_CASE("integral expressions evaluate through the same quadrature") {
  using fictio::Environment;
  using fictio::Rational;
  const auto e = fictio::parse_expression("integral(t^2, t, 0, x)");
  CHECK(fictio::evaluate<double>(e, {{"x", 2.0}}) == doctest::Approx(8.0 / 3).epsilon(1e-10));

  // Exact mode carries the quadrature value as a rationalized binary64.
  const Rational r = fictio::evaluate<Rational>(e, {{"x", Rational(2)}});
  CHECK(std::abs(fictio::rational_to_double(r) - 8.0 / 3) < 1e-10);
}

TEST_CASE("nested integrals inside the cap evaluate") {
  // iterated integral of t: x^2/2, then 1/6 over [0, 1]
  const auto e = fictio::parse_expression("integral(integral(t, t, 0, u), u, 0, x)");
  CHECK(fictio::evaluate<double>(e, {{"x", 1.0}}) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-9));
}

TEST_CASE("integral nesting is capped at the truncation order") {
  // Nine integrals deep, each bound variable feeding the next upper limit.
  std::string text = "t9";
  for (int i = 9; i >= 1; --i) {
    const std::string upper = i == 1 ? "x" : "t" + std::to_string(i - 1);
    text = "integral(" + text + ", t" + std::to_string(i) + ", 0, " + upper + ")";
  }
  const auto e = fictio::parse_expression(text);
  CHECK_THROWS_AS((void)fictio::evaluate<double>(e, {{"x", 1.0}}), fictio::EvalError);
}
