#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>

#include "fictio/rational.hpp"

namespace fictio {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Constant {
  Rational value;
};

struct Variable {
  std::string name;
};

enum class BinOp { Add, Sub, Mul, Div };

struct Binary {
  BinOp op;
  ExprPtr lhs, rhs;
};

struct Neg {
  ExprPtr arg;
};

// Integer exponents only; negative means reciprocal power.
struct IntPow {
  ExprPtr base;
  long exponent;
};

struct Sqrt {
  ExprPtr arg;
};

// integral(integrand, bound_var, lower, upper_var): definite integral of the
// integrand in bound_var from the rational literal `lower` to the value of
// the variable `upper_var` in the ambient environment.
struct Integral {
  ExprPtr integrand;
  std::string bound_var;
  Rational lower;
  std::string upper_var;
};

struct Expr {
  std::variant<Constant, Variable, Binary, Neg, IntPow, Sqrt, Integral> node;
};

template <typename N>
ExprPtr make_expr(N&& node) {
  return std::make_shared<const Expr>(Expr{std::forward<N>(node)});
}

// Grammar (infix, conventional precedence):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' ['-'] INTEGER)?
//   atom   := NUMBER | IDENT | 'sqrt' '(' expr ')'
//           | 'integral' '(' expr ',' IDENT ',' NUMBER ',' IDENT ')'
//           | '(' expr ')'
// NUMBER is an unsigned decimal literal (digits, optional fraction, optional
// exponent) parsed as an exact rational.  Syntax errors carry the offset.
ExprPtr parse_expression(const std::string& text);

// Canonical text form; parse(render(e)) reproduces the tree for every tree
// the parser can produce.
std::string render_expression(const ExprPtr& e);

// Variables the expression reads from its environment.  Integral bound
// variables are local and excluded; integral upper-limit variables count.
std::set<std::string> free_variables(const ExprPtr& e);

}  // namespace fictio
