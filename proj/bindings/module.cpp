#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "fictio/cubic.hpp"
#include "fictio/derivative.hpp"
#include "fictio/evaluate.hpp"
#include "fictio/expression.hpp"
#include "fictio/paraphrase.hpp"
#include "fictio/quadratic.hpp"
#include "fictio/rational.hpp"
#include "fictio/serialize.hpp"
#include "fictio/transfer.hpp"

namespace py = pybind11;
using namespace fictio;

namespace {

// Scalars cross the boundary as text ("3/4", "0.1") or python numbers;
// repr(float) is shortest-round-trip, so 0.1 really means 1/10 in exact
// mode, matching the CLI's reading of JSON numbers.
Rational rat_of(const py::object& v) {
  return rational_from_string(py::str(v).cast<std::string>());
}

bool exact_mode(const std::string& mode) {
  if (mode == "exact") return true;
  if (mode == "numeric") return false;
  throw UsageError("mode must be 'exact' or 'numeric'");
}

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

template <typename S>
Environment<S> env_of(const py::dict& params) {
  Environment<S> env;
  for (const auto& item : params)
    env[py::str(item.first).cast<std::string>()] =
        scalar_from_rational<S>(rat_of(py::reinterpret_borrow<py::object>(item.second)));
  return env;
}

template <typename S>
std::vector<S> scalars_of(const py::iterable& values) {
  std::vector<S> out;
  for (const auto& v : values)
    out.push_back(scalar_from_rational<S>(rat_of(py::reinterpret_borrow<py::object>(v))));
  return out;
}

py::object py_solve_quadratic(const py::object& b, const py::object& c,
                              const std::string& mode) {
  if (exact_mode(mode)) {
    auto sol = solve_quadratic<Rational>(rat_of(b), rat_of(c));
    Json j = quadratic_json(sol);
    j["residuals_exactly_zero"] = quadratic_residuals_exactly_zero(sol);
    return to_py(j);
  }
  const auto sol = solve_quadratic<double>(scalar_to_double(rat_of(b)),
                                           scalar_to_double(rat_of(c)));
  return to_py(quadratic_json(sol));
}

py::object py_solve_cubic(const py::object& p, const py::object& q, const std::string& mode,
                          int bombelli_bound) {
  const Rational rp = rat_of(p), rq = rat_of(q);
  const auto sol = exact_mode(mode)
                       ? solve_depressed_cubic_exact(rp, rq, bombelli_bound)
                       : solve_depressed_cubic(scalar_to_double(rp), scalar_to_double(rq));
  return to_py(cubic_solution_json(sol));
}

py::object py_solve_cubic_general(const py::object& a, const py::object& b,
                                  const py::object& c, const py::object& d,
                                  const std::string& mode, int bombelli_bound) {
  const Rational ra = rat_of(a), rb = rat_of(b), rc = rat_of(c), rd = rat_of(d);
  const auto sol =
      exact_mode(mode)
          ? solve_cubic_general_exact(ra, rb, rc, rd, bombelli_bound)
          : solve_cubic_general(scalar_to_double(ra), scalar_to_double(rb),
                                scalar_to_double(rc), scalar_to_double(rd));
  return to_py(general_cubic_json(sol));
}

py::object py_depress(const py::object& a, const py::object& b, const py::object& c,
                      const py::object& d, const std::string& mode) {
  Json j;
  if (exact_mode(mode)) {
    const auto dep = depress_cubic<Rational>(rat_of(a), rat_of(b), rat_of(c), rat_of(d));
    j["p"] = scalar_format(dep.p);
    j["q"] = scalar_format(dep.q);
    j["shift"] = scalar_format(dep.shift);
  } else {
    const auto dep = depress_cubic<double>(scalar_to_double(rat_of(a)), scalar_to_double(rat_of(b)),
                                           scalar_to_double(rat_of(c)), scalar_to_double(rat_of(d)));
    j["p"] = scalar_format(dep.p);
    j["q"] = scalar_format(dep.q);
    j["shift"] = scalar_format(dep.shift);
  }
  return to_py(j);
}

py::object py_bombelli_cbrt(const py::object& re, const py::object& im, int search_bound) {
  const ComplexQuantity<Rational> z{rat_of(re), rat_of(im)};
  const auto root = bombelli_extract_cbrt(z, search_bound);
  Json j;
  j["found"] = root.has_value();
  if (root) {
    Json r;
    r["re"] = scalar_format(root->re);
    r["im"] = scalar_format(root->im);
    j["root"] = r;
  } else {
    j["root"] = nullptr;
  }
  return to_py(j);
}

py::object py_trisect(const py::object& chord) {
  return to_py(trisection_json(girard_trisect(scalar_to_double(rat_of(chord)))));
}

py::object py_differentiate(const std::string& expr, const py::object& at,
                            const std::string& var, const std::string& mode,
                            const py::dict& params) {
  const auto e = parse_expression(expr);
  if (exact_mode(mode))
    return py::str(
        scalar_format(differentiate<Rational>(e, var, rat_of(at), env_of<Rational>(params))));
  return py::float_(differentiate<double>(e, var, scalar_to_double(rat_of(at)),
                                          env_of<double>(params)));
}

py::object py_tangent(const std::string& expr, const py::object& at, const std::string& var,
                      const std::string& mode, const py::dict& params) {
  const auto e = parse_expression(expr);
  if (exact_mode(mode))
    return to_py(
        tangent_json(tangent_data<Rational>(e, var, rat_of(at), env_of<Rational>(params))));
  return to_py(tangent_json(
      tangent_data<double>(e, var, scalar_to_double(rat_of(at)), env_of<double>(params))));
}

py::object py_paraphrase_check(const std::string& expr, const py::object& at,
                               const py::object& slope, const py::iterable& eps,
                               const std::string& var, const std::string& mode,
                               int max_halvings, const py::dict& params) {
  const auto e = parse_expression(expr);
  if (exact_mode(mode))
    return to_py(paraphrase_json(
        paraphrase_check<Rational>(e, var, rat_of(at), rat_of(slope), scalars_of<Rational>(eps),
                                   max_halvings, env_of<Rational>(params))));
  return to_py(paraphrase_json(paraphrase_check<double>(
      e, var, scalar_to_double(rat_of(at)), scalar_to_double(rat_of(slope)),
      scalars_of<double>(eps), max_halvings, env_of<double>(params))));
}

py::object py_transfer_check(const std::string& lhs, const std::string& rhs,
                             const std::vector<std::string>& vars, int trials,
                             unsigned long seed, const std::string& mode,
                             const py::object& tol) {
  const auto l = parse_expression(lhs), r = parse_expression(rhs);
  if (exact_mode(mode))
    return to_py(transfer_json(
        transfer_identity_check<Rational>(l, r, vars, trials, seed, Rational(0))));
  return to_py(transfer_json(transfer_identity_check<double>(
      l, r, vars, trials, seed, scalar_to_double(rat_of(tol)))));
}

py::object py_proportion(const py::object& a, const py::object& b, const py::object& c,
                         const py::object& d, const std::string& mode) {
  if (exact_mode(mode))
    return to_py(proportion_json(
        check_proportion<Rational>(rat_of(a), rat_of(b), rat_of(c), rat_of(d))));
  return to_py(proportion_json(
      check_proportion<double>(scalar_to_double(rat_of(a)), scalar_to_double(rat_of(b)),
                               scalar_to_double(rat_of(c)), scalar_to_double(rat_of(d)))));
}

std::string py_canonical(const std::string& expr) {
  return render_expression(parse_expression(expr));
}

std::vector<std::string> py_free_variables(const std::string& expr) {
  const auto vars = free_variables(parse_expression(expr));
  return {vars.begin(), vars.end()};
}

py::object py_evaluate(const std::string& expr, const py::dict& env, const std::string& mode) {
  const auto e = parse_expression(expr);
  if (exact_mode(mode))
    return py::str(scalar_format(evaluate<Rational>(e, env_of<Rational>(env))));
  return py::float_(evaluate<double>(e, env_of<double>(env)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "fictional quantities with checkable results: cubics through the imaginary "
            "radical, tangents through vanishing increments";

  // translators run newest-first, so the base class goes in first
  py::register_exception<Error>(m, "EngineError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ExpressionParseError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("solve_quadratic", &py_solve_quadratic, py::arg("b"), py::arg("c"),
        py::arg("mode") = "exact",
        "Roots of x^2 + b x + c as axis +- sqrt(discriminant), with exact sum/product.");
  m.def("solve_cubic", &py_solve_cubic, py::arg("p"), py::arg("q"), py::arg("mode") = "exact",
        py::arg("bombelli_bound") = 64,
        "Roots of the depressed cubic t^3 = p t + q, with the exact certificate when "
        "the radical tower stays rational.");
  m.def("solve_cubic_general", &py_solve_cubic_general, py::arg("a"), py::arg("b"),
        py::arg("c"), py::arg("d"), py::arg("mode") = "exact", py::arg("bombelli_bound") = 64,
        "Roots of a x^3 + b x^2 + c x + d via depression to t^3 = p t + q.");
  m.def("depress", &py_depress, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        py::arg("mode") = "exact", "Rewrite a general cubic as t^3 = p t + q, x = t + shift.");
  m.def("bombelli_cbrt", &py_bombelli_cbrt, py::arg("re"), py::arg("im"),
        py::arg("search_bound") = 64,
        "Search for an exact rational-component cube root of re + im*i.");
  m.def("trisect", &py_trisect, py::arg("chord"),
        "Trisect the angle subtending the given chord (unit circle) via the "
        "irreducible cubic.");
  m.def("differentiate", &py_differentiate, py::arg("expr"), py::arg("at"),
        py::arg("var") = "x", py::arg("mode") = "exact", py::arg("params") = py::dict(),
        "Slope by the infinitesimal increment quotient: st((f(x+eps)-f(x))/eps).");
  m.def("tangent", &py_tangent, py::arg("expr"), py::arg("at"), py::arg("var") = "x",
        py::arg("mode") = "exact", py::arg("params") = py::dict(),
        "Ordinate, slope, subtangent, and tangent line at a point.");
  m.def("paraphrase_check", &py_paraphrase_check, py::arg("expr"), py::arg("at"),
        py::arg("slope"), py::arg("eps"), py::arg("var") = "x", py::arg("mode") = "exact",
        py::arg("max_halvings") = 60, py::arg("params") = py::dict(),
        "For each error bound, hunt the halving ladder for a finite dx whose "
        "difference quotient stays within the bound from that rung on.");
  m.def("transfer_check", &py_transfer_check, py::arg("lhs"), py::arg("rhs"), py::arg("vars"),
        py::arg("trials") = 100, py::arg("seed") = 42, py::arg("mode") = "exact",
        py::arg("tol") = py::str("1e-9"),
        "Check an identity at random real points, then at infinitesimally "
        "displaced points, coefficient by coefficient.");
  m.def("proportion", &py_proportion, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        py::arg("mode") = "exact",
        "a : b = c : d read formally (a*d = b*c) versus by order intuition.");
  m.def("canonical", &py_canonical, py::arg("expr"),
        "Parse and re-render an expression in canonical spacing.");
  m.def("free_variables", &py_free_variables, py::arg("expr"),
        "Free variables of an expression, sorted.");
  m.def("evaluate", &py_evaluate, py::arg("expr"), py::arg("env") = py::dict(),
        py::arg("mode") = "exact", "Evaluate an expression under variable bindings.");
  m.def("truncation_order", &lc_truncation_order,
        "Number of series coefficients carried past the valuation.");
  m.def("set_truncation_order", &set_lc_truncation_order, py::arg("n"),
        "Set the carried series width (n >= 2).");

  m.attr("__version__") = "0.1.0";
}
