#include "fictio/expression.hpp"

#include <cctype>

#include "fictio/errors.hpp"

namespace fictio {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  ExprPtr parse() {
    ExprPtr e = expr();
    if (!eof()) fail("unexpected trailing input");
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      if (accept('+'))
        lhs = make_expr(Binary{BinOp::Add, lhs, term()});
      else if (accept('-'))
        lhs = make_expr(Binary{BinOp::Sub, lhs, term()});
      else
        return lhs;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (true) {
      if (accept('*'))
        lhs = make_expr(Binary{BinOp::Mul, lhs, factor()});
      else if (accept('/'))
        lhs = make_expr(Binary{BinOp::Div, lhs, factor()});
      else
        return lhs;
    }
  }

  ExprPtr factor() {
    if (accept('-')) return make_expr(Neg{factor()});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!accept('^')) return base;
    skip_ws();
    bool neg = false;
    if (accept('-')) neg = true;
    skip_ws();
    const std::size_t at = pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("exponent must be an integer literal", at);
    long e = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      e = e * 10 + (text[pos] - '0');
      if (e > 1000) throw ParseError("exponent out of range (|e| <= 1000)", at);
      ++pos;
    }
    if (pos < text.size() && (text[pos] == '.' || text[pos] == 'e' || text[pos] == 'E'))
      throw ParseError("exponent must be an integer literal", at);
    return make_expr(IntPow{base, neg ? -e : e});
  }

  ExprPtr atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = ident();
      if (name == "sqrt") {
        expect('(');
        ExprPtr arg = expr();
        expect(')');
        return make_expr(Sqrt{arg});
      }
      if (name == "integral") return integral();
      return make_expr(Variable{name});
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  ExprPtr integral() {
    expect('(');
    ExprPtr integrand = expr();
    expect(',');
    skip_ws();
    const std::size_t at = pos;
    const std::string bound = ident();
    if (bound.empty()) throw ParseError("expected the bound variable name", at);
    expect(',');
    skip_ws();
    bool neg = accept('-');
    Rational lower = number_literal();
    if (neg) lower = -lower;
    expect(',');
    skip_ws();
    const std::size_t at_up = pos;
    const std::string upper = ident();
    if (upper.empty()) throw ParseError("expected the upper-limit variable name", at_up);
    if (upper == bound)
      throw ParseError("bound variable must not shadow the upper-limit variable", at_up);
    expect(')');
    return make_expr(Integral{integrand, bound, lower, upper});
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_'))
        ++pos;
    }
    return text.substr(start, pos - start);
  }

  ExprPtr number() { return make_expr(Constant{number_literal()}); }

  Rational number_literal() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    if (pos == start || (pos == start + 1 && text[start] == '.'))
      throw ParseError("expected a number", start);
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      std::size_t e = pos + 1;
      if (e < text.size() && (text[e] == '+' || text[e] == '-')) ++e;
      if (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) {
        ++e;
        while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) ++e;
        pos = e;
      }
    }
    try {
      return rational_from_string(text.substr(start, pos - start));
    } catch (const Error& err) {
      throw ParseError(err.what(), start);
    }
  }
};

// Exact decimal text when the denominator divides a power of ten (which is
// every constant the parser can build); n/d would re-parse as a division.
std::string constant_text(const Rational& v) {
  Int num = numerator(v), den = denominator(v);
  if (den == 1) return num.str();
  int twos = 0, fives = 0;
  Int d = den;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return rational_to_string(v);  // programmatic constant; documented
  const int digits = std::max(twos, fives);
  Int scaled = num;
  for (int i = twos; i < digits; ++i) scaled *= 2;
  for (int i = fives; i < digits; ++i) scaled *= 5;
  std::string s = scaled.str();
  const bool neg = !s.empty() && s[0] == '-';
  if (neg) s.erase(0, 1);
  while (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, "0");
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (neg ? "-" : "") + s;
}

// Rendering with minimal structural parentheses: enough that re-parsing
// reproduces the tree exactly.  Constants are ranked by how their *text*
// re-parses: "n/d" behaves like a division, a leading '-' like a negation.
int prec_of(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Binary>)
          return (n.op == BinOp::Add || n.op == BinOp::Sub) ? 1 : 2;
        else if constexpr (std::is_same_v<T, Neg>)
          return 3;
        else if constexpr (std::is_same_v<T, IntPow>)
          return 4;
        else if constexpr (std::is_same_v<T, Constant>) {
          if (denominator(n.value) != 1) {
            const std::string text = constant_text(n.value);
            if (text.find('/') != std::string::npos) return 2;
          }
          return n.value < 0 ? 3 : 5;
        } else
          return 5;
      },
      e.node);
}

void render(const ExprPtr& e, std::string& out);

void render_child(const ExprPtr& child, int parent_prec, bool strict, std::string& out) {
  const bool parens = prec_of(*child) < parent_prec + (strict ? 1 : 0);
  if (parens) out += '(';
  render(child, out);
  if (parens) out += ')';
}

void render(const ExprPtr& e, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Constant>) {
          out += constant_text(n.value);
        } else if constexpr (std::is_same_v<T, Variable>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Binary>) {
          const int p = (n.op == BinOp::Add || n.op == BinOp::Sub) ? 1 : 2;
          render_child(n.lhs, p, false, out);
          switch (n.op) {
            case BinOp::Add: out += " + "; break;
            case BinOp::Sub: out += " - "; break;
            case BinOp::Mul: out += "*"; break;
            case BinOp::Div: out += "/"; break;
          }
          render_child(n.rhs, p, true, out);
        } else if constexpr (std::is_same_v<T, Neg>) {
          out += '-';
          render_child(n.arg, 3, false, out);
        } else if constexpr (std::is_same_v<T, IntPow>) {
          render_child(n.base, 5, false, out);
          out += '^';
          if (n.exponent < 0) {
            out += '-';
            out += std::to_string(-n.exponent);
          } else {
            out += std::to_string(n.exponent);
          }
        } else if constexpr (std::is_same_v<T, Sqrt>) {
          out += "sqrt(";
          render(n.arg, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, Integral>) {
          out += "integral(";
          render(n.integrand, out);
          out += ", " + n.bound_var + ", " + constant_text(n.lower) + ", " + n.upper_var + ")";
        }
      },
      e->node);
}

}  // namespace

ExprPtr parse_expression(const std::string& text) {
  Parser p(text);
  return p.parse();
}

namespace {

void collect_free(const ExprPtr& e, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Variable>) {
          out.insert(n.name);
        } else if constexpr (std::is_same_v<T, Binary>) {
          collect_free(n.lhs, out);
          collect_free(n.rhs, out);
        } else if constexpr (std::is_same_v<T, Neg>) {
          collect_free(n.arg, out);
        } else if constexpr (std::is_same_v<T, IntPow>) {
          collect_free(n.base, out);
        } else if constexpr (std::is_same_v<T, Sqrt>) {
          collect_free(n.arg, out);
        } else if constexpr (std::is_same_v<T, Integral>) {
          std::set<std::string> inner;
          collect_free(n.integrand, inner);
          inner.erase(n.bound_var);
          out.insert(inner.begin(), inner.end());
          out.insert(n.upper_var);
        }
      },
      e->node);
}

}  // namespace

std::set<std::string> free_variables(const ExprPtr& e) {
  std::set<std::string> out;
  if (e) collect_free(e, out);
  return out;
}

std::string render_expression(const ExprPtr& e) {
  if (!e) throw EvalError("cannot render a null expression");
  std::string out;
  render(e, out);
  return out;
}

}  // namespace fictio
