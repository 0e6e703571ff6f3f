#pragma once

#include <optional>
#include <string>

#include "fictio/evaluate.hpp"

namespace fictio {

// Slope of expr in `var` at x0: form the increment quotient
//   (f(x0 + eps) - f(x0)) / eps
// in the infinitesimal-extended field and take its standard part.  No
// differentiation rules live anywhere in this codebase; the usual rules are
// theorems the test suite checks against this definition.  Variables in
// `env` other than `var` are held at their scalar values (partial
// semantics).  A vertical tangent makes the quotient infinite and surfaces
// as the standard-part DomainError.
template <typename S>
S differentiate(const ExprPtr& expr, const std::string& var, const S& x0,
                const Environment<S>& env = {}) {
  using V = LCNumber<S>;
  Environment<V> lifted;
  for (const auto& [name, value] : env) lifted[name] = V::from_scalar(value);
  lifted[var] = V::from_scalar(x0);
  const V f0 = evaluate<V>(expr, lifted);
  lifted[var] = V::from_scalar(x0) + V::epsilon();
  const V f1 = evaluate<V>(expr, lifted);
  return standard_part((f1 - f0) / V::epsilon());
}

// Everything the classical tangent construction needs at one point: the
// ordinate y0, the slope, the subtangent y0/slope (the signed run between
// the tangent's axis crossing and the foot of the ordinate -- absent when
// the tangent is horizontal), and the tangent line y = slope*x + intercept.
template <typename S>
struct TangentData {
  S x0{};
  S ordinate{};
  S slope{};
  std::optional<S> subtangent;
  S intercept{};
};

template <typename S>
TangentData<S> tangent_data(const ExprPtr& expr, const std::string& var, const S& x0,
                            const Environment<S>& env = {}) {
  TangentData<S> t;
  t.x0 = x0;
  Environment<S> at = env;
  at[var] = x0;
  t.ordinate = evaluate<S>(expr, at);
  t.slope = differentiate<S>(expr, var, x0, env);
  if (!scalar_is_zero(t.slope)) t.subtangent = t.ordinate / t.slope;
  t.intercept = t.ordinate - t.slope * x0;
  return t;
}

}  // namespace fictio
