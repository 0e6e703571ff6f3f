#pragma once

#include <cmath>
#include <map>
#include <string>
#include <type_traits>

#include "fictio/complex_quantity.hpp"
#include "fictio/errors.hpp"
#include "fictio/expression.hpp"
#include "fictio/lc_number.hpp"
#include "fictio/quadrature.hpp"
#include "fictio/rational.hpp"
#include "fictio/scalar.hpp"

namespace fictio {

// One expression tree, five value domains: binary64, extended binary
// (paraphrase checks at tight tolerances), exact rationals, rectangular
// complex, and the infinitesimal-extended line.  The same recursion serves
// all of them; the leaves below say what each domain can and cannot do.
template <typename V>
using Environment = std::map<std::string, V>;

namespace detail {

template <typename V>
inline constexpr bool is_lc_v = false;
template <typename S>
inline constexpr bool is_lc_v<LCNumber<S>> = true;

template <typename V>
struct lc_scalar;
template <typename S>
struct lc_scalar<LCNumber<S>> {
  using type = S;
};

template <typename V>
inline constexpr bool is_complex_v = std::is_same_v<V, ComplexQuantity<double>>;

template <typename V>
V value_from_rational(const Rational& r) {
  if constexpr (std::is_same_v<V, double>) {
    return rational_to_double(r);
  } else if constexpr (std::is_same_v<V, long double>) {
    return r.convert_to<long double>();
  } else if constexpr (std::is_same_v<V, Rational>) {
    return r;
  } else if constexpr (is_complex_v<V>) {
    return V{rational_to_double(r), 0.0};
  } else {
    using S = typename lc_scalar<V>::type;
    return V::from_scalar(scalar_from_rational<S>(r));
  }
}

template <typename V>
double value_to_plain_double(const V& v) {
  if constexpr (std::is_same_v<V, double>) {
    return v;
  } else if constexpr (std::is_same_v<V, long double>) {
    return static_cast<double>(v);
  } else if constexpr (std::is_same_v<V, Rational>) {
    return rational_to_double(v);
  } else {
    static_assert(is_lc_v<V>, "no plain-double view of this domain");
    return scalar_to_double(standard_part(v));
  }
}

template <typename V>
V value_div(const V& a, const V& b) {
  if constexpr (std::is_same_v<V, double> || std::is_same_v<V, long double> ||
                std::is_same_v<V, Rational>) {
    if (b == V(0)) throw DivisionByZero("division by zero");
    return a / b;
  } else {
    return a / b;  // complex and LC division do their own zero handling
  }
}

template <typename V>
V value_sqrt(const V& a) {
  if constexpr (std::is_same_v<V, double> || std::is_same_v<V, long double>) {
    if (a < V(0)) throw DomainError("sqrt of a negative number");
    return std::sqrt(a);
  } else if constexpr (std::is_same_v<V, Rational>) {
    auto r = rational_sqrt(a);
    if (!r)
      throw DomainError("sqrt(" + rational_to_string(a) +
                        ") is not rational; exact mode cannot represent it");
    return *r;
  } else if constexpr (is_complex_v<V>) {
    return complex_sqrt_principal(a);
  } else {
    return lc_sqrt(a);
  }
}

template <typename V>
V value_intpow(const V& base, long e) {
  if (e > 10000 || e < -10000) throw RangeError("exponent out of range");
  const V one = value_from_rational<V>(Rational(1));
  if (e == 0) return one;  // 0^0 = 1 by the usual combinatorial convention
  const bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  V acc = one;
  V b = base;
  while (k > 0) {
    if (k & 1u) acc = acc * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return invert ? value_div(one, acc) : acc;
}

template <typename V>
const V& lookup(const Environment<V>& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) throw EvalError("unbound variable '" + name + "'");
  return it->second;
}

template <typename V>
V evaluate_node(const ExprPtr& e, const Environment<V>& env);

inline int& integral_nesting_depth() {
  thread_local int depth = 0;
  return depth;
}

// Nested integrals multiply quadrature work per level; the truncation order
// doubles as the depth bound so no input can recurse the evaluator into
// exponential territory.
struct NestingGuard {
  NestingGuard() {
    if (++integral_nesting_depth() > lc_truncation_order())
      throw EvalError("integral nesting deeper than the truncation order");
  }
  ~NestingGuard() { --integral_nesting_depth(); }
};

// Definite integral with a variable upper limit, over the plain domains:
// straight quadrature.  Exact mode keeps the binary64 quadrature value,
// converted exactly; the error this admits lives only in the constant term
// and cancels wherever two integrals from the same lower limit are
// subtracted (which is how derivatives consume this node).
template <typename V>
V integral_plain(const Integral& n, const Environment<V>& env) {
  NestingGuard guard;
  Environment<double> base;
  for (const auto& [name, value] : env) base[name] = value_to_plain_double(value);
  const double upper = value_to_plain_double(lookup(env, n.upper_var));
  auto g = [&](double t) {
    base[n.bound_var] = t;
    return evaluate_node<double>(n.integrand, base);
  };
  const double result = integrate(g, rational_to_double(n.lower), upper);
  if constexpr (std::is_same_v<V, Rational>) {
    return Rational(result);  // exact value of the binary64 result
  } else {
    return V(result);
  }
}

// The same node over the infinitesimal-extended line.  Split the upper limit
// X into its standard part x0 plus the deviation d, take the constant part
// by quadrature up to x0, and integrate the deviation term by term from the
// series of the integrand around x0:
//
//   integral(a, x0 + d) = integral(a, x0) + sum_k  c_k d^(k+1) / (k+1),
//
// where the integrand expands as sum_k c_k eps^k at x0.  Free variables
// other than the upper limit must not carry deviations of their own -- the
// expansion above has nowhere to put them, so that case fails loudly.
template <typename S>
LCNumber<S> integral_lc(const Integral& n, const Environment<LCNumber<S>>& env) {
  using V = LCNumber<S>;
  NestingGuard guard;
  const V& upper = lookup(env, n.upper_var);
  const S x0 = standard_part(upper);
  const V dev = upper - V::from_scalar(x0);

  Environment<V> frozen;
  Environment<double> base;
  for (const auto& name : free_variables(n.integrand)) {
    if (name == n.bound_var) continue;
    const V& bound_value = name == n.upper_var ? upper : lookup(env, name);
    const S st = standard_part(bound_value);
    if (name != n.upper_var && !(bound_value - V::from_scalar(st)).is_zero())
      throw EvalError("integral cannot track a deviation of the free variable '" + name +
                      "'; only the upper limit may carry one");
    frozen[name] = V::from_scalar(name == n.upper_var ? x0 : st);
    base[name] = scalar_to_double(st);
  }

  auto g = [&](double t) {
    base[n.bound_var] = t;
    return evaluate_node<double>(n.integrand, base);
  };
  const double constant = integrate(g, rational_to_double(n.lower), scalar_to_double(x0));
  V result = V::from_scalar(scalar_from_plain_double<S>(constant));

  if (dev.is_zero()) {
    if (dev.precision_order()) result = result.with_precision_capped(*dev.precision_order());
    return result;
  }

  frozen[n.bound_var] = V::from_scalar(x0) + V::epsilon();
  const V series = evaluate_node<V>(n.integrand, frozen);
  const int vd = dev.valuation();  // >= 1: the deviation is infinitesimal
  const int pdev = *dev.precision_order();

  if (series.is_zero()) {
    if (!series.precision_order()) return result;  // integrand is exactly zero near x0
    const int cap = std::min((*series.precision_order() + 2) * vd - 1, pdev);
    return result.with_precision_capped(cap);
  }

  const int vg = series.valuation();
  if (vg < 0)
    throw DomainError("integrand is infinite at the upper limit's standard part");
  const int pg = *series.precision_order();
  V sum = V::zero();
  V dpow = dev;  // dev^(k+1) as k advances
  for (int k = 0; k <= pg; ++k) {
    if (k > 0) {
      if (static_cast<long>(k + 1) * vd > 1000000) break;  // beyond representable orders
      dpow = dpow * dev;
      if (dpow.is_zero() && !dpow.precision_order()) break;
    }
    const S ck = series.coefficient(k);
    if (!scalar_is_zero(ck))
      sum = sum + V::from_scalar(ck / scalar_from_int<S>(k + 1)) * dpow;
  }
  const int cap = std::min((pg + 2) * vd - 1, pdev + vg);
  return (result + sum).with_precision_capped(cap);
}

template <typename V>
V evaluate_node(const ExprPtr& e, const Environment<V>& env) {
  return std::visit(
      [&](const auto& n) -> V {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return value_from_rational<V>(n.value);
        } else if constexpr (std::is_same_v<T, Variable>) {
          return lookup(env, n.name);
        } else if constexpr (std::is_same_v<T, Binary>) {
          const V a = evaluate_node<V>(n.lhs, env);
          const V b = evaluate_node<V>(n.rhs, env);
          switch (n.op) {
            case BinOp::Add: return a + b;
            case BinOp::Sub: return a - b;
            case BinOp::Mul: return a * b;
            case BinOp::Div: return value_div(a, b);
          }
          throw EvalError("unreachable operator");
        } else if constexpr (std::is_same_v<T, Neg>) {
          return -evaluate_node<V>(n.arg, env);
        } else if constexpr (std::is_same_v<T, IntPow>) {
          return value_intpow(evaluate_node<V>(n.base, env), n.exponent);
        } else if constexpr (std::is_same_v<T, Sqrt>) {
          return value_sqrt(evaluate_node<V>(n.arg, env));
        } else {
          static_assert(std::is_same_v<T, Integral>);
          if constexpr (is_complex_v<V>) {
            throw EvalError("integral over a complex domain is unsupported");
          } else if constexpr (is_lc_v<V>) {
            return integral_lc(n, env);
          } else {
            return integral_plain(n, env);
          }
        }
      },
      e->node);
}

}  // namespace detail

template <typename V>
V evaluate(const ExprPtr& e, const Environment<V>& env) {
  if (!e) throw EvalError("cannot evaluate a null expression");
  return detail::evaluate_node<V>(e, env);
}

}  // namespace fictio
