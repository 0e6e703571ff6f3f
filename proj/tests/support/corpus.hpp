#pragma once

// Shared inputs for the derivative and identity suites.  Every curve carries
// its closed-form slope so exact-mode runs can demand equality, not just
// closeness; sqrt curves sample only points where the radicand is a perfect
// rational square, so the same table works under both arithmetic modes.

#include <string>
#include <vector>

namespace fictio::testing {

struct CurveCase {
  std::string expr;                 // function of x (may mention a held 'a')
  std::string slope;                // closed-form derivative, same variables
  std::string held;                 // exact value bound to 'a', "" when unused
  std::vector<std::string> points;  // abscissas, exact text
};

inline const std::vector<CurveCase>& derivative_corpus() {
  static const std::vector<CurveCase> cases = {
      {"x^2", "2*x", "", {"1/2", "1", "2", "3", "-3/2"}},
      {"x^3 - 2*x + 1", "3*x^2 - 2", "", {"2", "3", "-2", "5/2", "-5/2"}},
      {"1/x", "-1/x^2", "", {"1", "2", "-1", "1/2", "-2"}},
      {"x^2/a", "2*x/a", "2", {"1", "2", "3", "-1", "5"}},
      {"(x^2 + 1)/(x - 2)", "(x^2 - 4*x - 1)/(x - 2)^2", "", {"0", "1", "3", "4", "-1"}},
      {"x^4 - 3*x^2", "4*x^3 - 6*x", "", {"1", "2", "-1", "3", "1/2"}},
      {"(x + 1)*(x - 2)*(x + 3)", "3*x^2 + 4*x - 5", "", {"0", "1", "-1", "3", "-4"}},
      {"1/(x^2 + 1)", "-2*x/(x^2 + 1)^2", "", {"1", "-1", "1/2", "2", "-2"}},
      {"x^2*(x - 1)^2", "2*x*(x - 1)*(2*x - 1)", "", {"2", "-1", "3", "1/4", "3/2"}},
      {"(x^3 + x)/(x^2 + 1)", "1", "", {"0", "1", "-1", "2", "7/3"}},
      {"x^5/10 + x^2", "x^4/2 + 2*x", "", {"1", "2", "-1", "-2", "1/2"}},
      {"(2*x - 1)^3", "6*(2*x - 1)^2", "", {"0", "1", "2", "-1", "3/4"}},
      {"x/(x + 5)", "5/(x + 5)^2", "", {"0", "1", "-1", "2", "-2"}},
      {"1/x^2", "-2/x^3", "", {"1", "2", "-1", "1/2", "3/2"}},
      {"sqrt(x)", "1/(2*sqrt(x))", "", {"1", "4", "9", "25/4", "16"}},
      {"sqrt(x^2 + 9)", "x/sqrt(x^2 + 9)", "", {"4", "-4", "-5/4", "9/4", "8/5"}},
      {"x*sqrt(x)", "3*sqrt(x)/2", "", {"1", "4", "9", "1/4", "25/4"}},
      {"sqrt(4*x)", "1/sqrt(x)", "", {"1", "4", "9", "1/4", "16"}},
      {"1/sqrt(x)", "-1/(2*x*sqrt(x))", "", {"1", "1/4", "9/4", "4/9", "1/9"}},
      {"sqrt((x + 1)*(x + 2))", "(2*x + 3)/(2*sqrt((x + 1)*(x + 2)))", "",
       {"-7/8", "-7/16", "1/24", "17/32", "41/40"}},
  };
  return cases;
}

struct IdentityCase {
  std::string lhs, rhs;
  std::vector<std::string> vars;
};

inline const std::vector<IdentityCase>& identity_corpus() {
  static const std::vector<IdentityCase> cases = {
      {"(x + y)^2", "x^2 + 2*x*y + y^2", {"x", "y"}},
      {"(x + y)^3", "x^3 + 3*x^2*y + 3*x*y^2 + y^3", {"x", "y"}},
      {"(x - y)*(x + y)", "x^2 - y^2", {"x", "y"}},
      {"(x^2 - 1)/(x - 1)", "x + 1", {"x"}},
      {"(x^3 - 1)/(x - 1)", "x^2 + x + 1", {"x"}},
      {"1/(x*(x + 1))", "1/x - 1/(x + 1)", {"x"}},
      {"(x + 1)^2 - (x - 1)^2", "4*x", {"x"}},
      {"(x*y)^2", "x^2*y^2", {"x", "y"}},
      {"1/x - 1/(x + 2)", "2/(x*(x + 2))", {"x"}},
      {"(1 - x^4)/(1 + x^2)", "1 - x^2", {"x"}},
  };
  return cases;
}

// The quarter-arch test curve: height plus arc length of the unit-radius
// cycloid as a function of the height coordinate.  The slope at x = 1 is
// exactly 1, and the integrand blows up (integrably) at the lower limit.
inline const char* cycloid_text() {
  return "sqrt(2*x - x^2) + integral(1/sqrt(2*t - t^2), t, 0, x)";
}

}  // namespace fictio::testing
