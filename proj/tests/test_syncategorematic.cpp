#include <doctest.h>

#include <vector>

#include "fictio/errors.hpp"
#include "fictio/expression.hpp"
#include "fictio/paraphrase.hpp"
#include "fictio/rational.hpp"
#include "fictio/transfer.hpp"
#include "support/corpus.hpp"

using fictio::parse_expression;
using fictio::Rational;
namespace ft = fictio::testing;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("a true slope survives every error bound, without infinitesimals") {
  const auto f = parse_expression("x^2");
  std::vector<Rational> eps;
  for (Rational e(1, 100);; e /= 100) {
    eps.push_back(e);
    if (e <= Rational(1, 100000000)) break;
  }
  const auto report = fictio::paraphrase_check<Rational>(f, "x", q(1), q(2), eps);
  CHECK(report.pass);
  for (const auto& entry : report.entries) {
    REQUIRE(entry.witness_dx.has_value());
    // The witness is literally a finite increment: 1/10 halved k times.
    Rational dx(1, 10);
    for (int i = 0; i < entry.halvings_used; ++i) dx /= 2;
    CHECK(*entry.witness_dx == dx);
    // And the claim it certifies is about every rung from there down.
    REQUIRE(entry.achieved_error.has_value());
    CHECK(*entry.achieved_error < entry.epsilon);
  }
  // Tighter bounds need deeper rungs.
  CHECK(report.entries.front().halvings_used < report.entries.back().halvings_used);
}

TEST_CASE("a slope off by a tenth fails every bound below a twentieth") {
  // At dx = 1/10 the difference quotient of x^2 at 1 is 2 + 1/10, hitting the
  // bogus claim 2.1 exactly; a first-hit check would be fooled.  The suffix
  // requirement sees the error grow back toward 1/10 as dx shrinks.
  const auto f = parse_expression("x^2");
  const auto report = fictio::paraphrase_check<Rational>(
      f, "x", q(1), q(21, 10), {q(1, 25), q(1, 100), q(1, 10000)});
  CHECK(!report.pass);
  for (const auto& entry : report.entries) CHECK(!entry.witness_dx.has_value());

  // Loose bounds (above the offset) are still satisfiable.
  const auto loose =
      fictio::paraphrase_check<Rational>(f, "x", q(1), q(21, 10), {q(1, 5)});
  CHECK(loose.pass);
}

TEST_CASE("numeric mode stops the ladder before round-off noise") {
  const auto f = parse_expression("x^2");
  const auto report =
      fictio::paraphrase_check<double>(f, "x", 1.0, 2.0, {1e-2, 1e-6, 1e-8});
  CHECK(report.pass);
  for (const auto& entry : report.entries) {
    REQUIRE(entry.witness_dx.has_value());
    CHECK(*entry.achieved_error < entry.epsilon);
  }
  // The double ladder cannot certify bounds finer than the arithmetic.
  CHECK(report.entries.back().halvings_used < 30);
}

TEST_CASE("rungs that cannot be evaluated fail soft, per bound") {
  const auto f = parse_expression("1/x");
  const auto report = fictio::paraphrase_check<Rational>(f, "x", q(0), q(1), {q(1, 10)});
  CHECK(!report.pass);  // f(0) itself is undefined: no rung can witness
  for (const auto& entry : report.entries) CHECK(!entry.witness_dx.has_value());
}

TEST_CASE("paraphrase input validation") {
  const auto f = parse_expression("x^2");
  CHECK_THROWS_AS(
      (void)fictio::paraphrase_check<Rational>(f, "x", q(1), q(2), {q(0)}),
      fictio::UsageError);
  CHECK_THROWS_AS(
      (void)fictio::paraphrase_check<Rational>(f, "x", q(1), q(2), {q(-1, 10)}),
      fictio::UsageError);
  CHECK_THROWS_AS(
      (void)fictio::paraphrase_check<Rational>(f, "x", q(1), q(2), {q(1, 10)}, 0),
      fictio::UsageError);
}

TEST_CASE("identities transfer from rationals to the extended field") {
  for (const auto& identity : ft::identity_corpus()) {
    CAPTURE(identity.lhs);
    const auto lhs = parse_expression(identity.lhs);
    const auto rhs = parse_expression(identity.rhs);
    const auto report = fictio::transfer_identity_check<Rational>(
        lhs, rhs, identity.vars, 50, 20260817, Rational(0));
    CHECK(report.pass);
    CHECK(report.real_points == 50);
    CHECK(report.lc_points == 50);
    CHECK(report.real_max_deviation == 0);
    CHECK(report.lc_max_deviation == 0);
    CHECK(report.lc_all_coefficients_agree);
  }
}

TEST_CASE("a perturbed identity fails both phases") {
  const auto lhs = parse_expression("(x + y)^2");
  const auto rhs = parse_expression("x^2 + 2*x*y + y^2 + 1/1000000");
  const auto report =
      fictio::transfer_identity_check<Rational>(lhs, rhs, {"x", "y"}, 50, 1, Rational(0));
  CHECK(!report.pass);
  CHECK(!report.real_pass);
  CHECK(report.real_max_deviation == Rational(1, 1000000));
}

TEST_CASE("numeric transfer tolerates only round-off") {
  const auto lhs = parse_expression("(x + y)^3");
  const auto rhs = parse_expression("x^3 + 3*x^2*y + 3*x*y^2 + y^3");
  const auto good =
      fictio::transfer_identity_check<double>(lhs, rhs, {"x", "y"}, 50, 7, 1e-9);
  CHECK(good.pass);

  const auto bad_rhs = parse_expression("x^3 + 3*x^2*y + 3*x*y^2 + y^3 + 1/1000");
  const auto bad =
      fictio::transfer_identity_check<double>(lhs, bad_rhs, {"x", "y"}, 50, 7, 1e-9);
  CHECK(!bad.pass);
}

TEST_CASE("poles are resampled; hopeless samplers give up loudly") {
  // x = 1 is a removable hole on the left side only; sampling retries it.
  const auto lhs = parse_expression("(x^2 - 1)/(x - 1)");
  const auto rhs = parse_expression("x + 1");
  const auto report =
      fictio::transfer_identity_check<Rational>(lhs, rhs, {"x"}, 100, 3, Rational(0));
  CHECK(report.pass);

  // Division by an exact zero at every sample: the retry cap must trip.
  const auto hopeless = parse_expression("1/(x - x)");
  CHECK_THROWS_AS((void)fictio::transfer_identity_check<Rational>(
                      hopeless, rhs, {"x"}, 10, 3, Rational(0)),
                  fictio::SamplingError);
}
