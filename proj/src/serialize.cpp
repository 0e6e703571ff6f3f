#include "fictio/serialize.hpp"

namespace fictio {

namespace {

const char* error_type_name(const Error& e) {
  if (dynamic_cast<const DivisionByZero*>(&e)) return "division-by-zero";
  if (dynamic_cast<const PrecisionExhausted*>(&e)) return "precision-exhausted";
  if (dynamic_cast<const RangeError*>(&e)) return "range";
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const EvalError*>(&e)) return "evaluation";
  if (dynamic_cast<const QuadratureError*>(&e)) return "quadrature";
  if (dynamic_cast<const NotFoundError*>(&e)) return "not-found";
  if (dynamic_cast<const SamplingError*>(&e)) return "sampling";
  if (dynamic_cast<const UsageError*>(&e)) return "usage";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  return "error";
}

}  // namespace

Json error_json(const Error& e) {
  Json j;
  j["error"] = Json{{"type", error_type_name(e)}, {"message", e.what()}};
  return j;
}

Json cx_json(const Cx& z) {
  Json j;
  j["re"] = scalar_format(z.re);
  j["im"] = scalar_format(z.im);
  return j;
}

std::string surd_text(const Rational& rational_part, const Rational& surd_coeff,
                      const Rational& radicand) {
  if (surd_coeff == 0) return rational_to_string(rational_part);
  std::string root = "sqrt(" + rational_to_string(radicand) + ")";
  std::string surd;
  if (surd_coeff == 1)
    surd = root;
  else if (surd_coeff == -1)
    surd = "-" + root;
  else
    surd = rational_to_string(surd_coeff) + "*" + root;
  if (rational_part == 0) return surd;
  if (surd_coeff < 0) {
    // re-render with an explicit minus between the terms
    Rational pos = -surd_coeff;
    std::string tail = pos == 1 ? root : rational_to_string(pos) + "*" + root;
    return rational_to_string(rational_part) + " - " + tail;
  }
  return rational_to_string(rational_part) + " + " + surd;
}

std::string exact_root_text(const ExactRoot& r, const Rational& radicand) {
  std::string re = surd_text(r.re_rational, r.re_surd, radicand);
  if (r.im_rational == 0 && r.im_surd == 0) return re;
  std::string im = surd_text(r.im_rational, r.im_surd, radicand);
  return re + " + (" + im + ")*i";
}

namespace {

Json exact_certificate_json(const CubicExactCertificate& c) {
  Json j;
  j["p"] = rational_to_string(c.p);
  j["q"] = rational_to_string(c.q);
  j["discriminant"] = rational_to_string(c.discriminant);
  j["radicand"] = rational_to_string(c.radicand);
  Json roots = Json::array();
  for (const auto& r : c.roots) {
    Json jr;
    jr["re_rational"] = rational_to_string(r.re_rational);
    jr["re_surd_coeff"] = rational_to_string(r.re_surd);
    jr["im_rational"] = rational_to_string(r.im_rational);
    jr["im_surd_coeff"] = rational_to_string(r.im_surd);
    jr["text"] = exact_root_text(r, c.radicand);
    roots.push_back(std::move(jr));
  }
  j["roots"] = roots;
  j["residuals_zero"] = c.residuals_zero;
  j["via_bombelli"] = c.via_bombelli;
  if (c.bombelli_root) {
    Json b;
    b["re"] = rational_to_string(c.bombelli_root->re);
    b["im"] = rational_to_string(c.bombelli_root->im);
    j["bombelli_root"] = b;
  } else {
    j["bombelli_root"] = nullptr;
  }
  return j;
}

}  // namespace

Json cubic_solution_json(const CubicSolution& sol) {
  Json j;
  j["p"] = scalar_format(sol.p);
  j["q"] = scalar_format(sol.q);
  j["discriminant_term"] = scalar_format(sol.discriminant_term);
  j["classification"] = cubic_class_name(sol.classification);
  j["used_imaginaries"] = sol.used_imaginaries;
  Json roots = Json::array();
  for (const auto& r : sol.roots) roots.push_back(cx_json(r));
  j["roots"] = roots;
  Json res = Json::array();
  for (double r : sol.residuals) res.push_back(scalar_format(r));
  j["residuals"] = res;
  if (sol.exact)
    j["exact"] = exact_certificate_json(*sol.exact);
  else
    j["exact"] = nullptr;
  return j;
}

Json general_cubic_json(const GeneralCubicSolution& sol) {
  Json j;
  j["a"] = scalar_format(sol.a);
  j["b"] = scalar_format(sol.b);
  j["c"] = scalar_format(sol.c);
  j["d"] = scalar_format(sol.d);
  j["shift"] = scalar_format(sol.shift);
  Json roots = Json::array();
  for (const auto& r : sol.roots) roots.push_back(cx_json(r));
  j["roots"] = roots;
  Json res = Json::array();
  for (double r : sol.residuals) res.push_back(scalar_format(r));
  j["residuals"] = res;
  j["depressed"] = cubic_solution_json(sol.depressed);
  return j;
}

Json trisection_json(const TrisectionResult& t) {
  Json j;
  j["chord"] = scalar_format(t.chord);
  j["trisected_chord"] = scalar_format(t.trisected_chord);
  j["used_imaginaries"] = t.cubic.used_imaginaries;
  j["cubic"] = cubic_solution_json(t.cubic);
  return j;
}

}  // namespace fictio
