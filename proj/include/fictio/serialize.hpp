#pragma once

#include <json.hpp>
#include <string>

#include "fictio/cubic.hpp"
#include "fictio/derivative.hpp"
#include "fictio/paraphrase.hpp"
#include "fictio/quadratic.hpp"
#include "fictio/transfer.hpp"

// JSON report builders.  Every scalar is serialized as a string -- "n/d" in
// exact mode, 15-significant-digit decimal in numeric mode -- so reports
// diff cleanly and exact values survive the trip.  Key order is fixed
// (ordered_json) to keep byte-identical reruns byte-identical.

namespace fictio {

using Json = nlohmann::ordered_json;

Json error_json(const Error& e);
Json cx_json(const Cx& z);
Json cubic_solution_json(const CubicSolution& sol);
Json general_cubic_json(const GeneralCubicSolution& sol);
Json trisection_json(const TrisectionResult& t);

// "-2 - 1*sqrt(3)" style rendering of one exact certificate root component
// pair (rational + coeff*sqrt(radicand)); pure rationals render bare.
std::string surd_text(const Rational& rational_part, const Rational& surd_coeff,
                      const Rational& radicand);
std::string exact_root_text(const ExactRoot& r, const Rational& radicand);

template <typename S>
Json quadratic_json(const QuadraticSolution<S>& sol) {
  Json j;
  j["b"] = scalar_format(sol.b);
  j["c"] = scalar_format(sol.c);
  j["axis"] = scalar_format(sol.axis);
  j["discriminant"] = scalar_format(sol.discriminant);
  j["imaginary"] = sol.imaginary;
  j["sum"] = scalar_format(sol.sum());
  j["product"] = scalar_format(sol.product());
  Json roots = Json::array();
  for (const auto& r : sol.roots()) roots.push_back(cx_json(r));
  j["roots"] = roots;
  Json res = Json::array();
  for (double r : sol.residuals()) res.push_back(scalar_format(r));
  j["residuals"] = res;
  return j;
}

template <typename S>
Json proportion_json(const ProportionReport<S>& r) {
  Json j;
  j["a"] = scalar_format(r.a);
  j["b"] = scalar_format(r.b);
  j["c"] = scalar_format(r.c);
  j["d"] = scalar_format(r.d);
  j["formal_holds"] = r.formal_holds;
  j["intuition_consistent"] = r.intuition_consistent;
  j["paradox"] = r.paradox;
  return j;
}

template <typename S>
Json tangent_json(const TangentData<S>& t) {
  Json j;
  j["at"] = scalar_format(t.x0);
  j["ordinate"] = scalar_format(t.ordinate);
  j["slope"] = scalar_format(t.slope);
  if (t.subtangent)
    j["subtangent"] = scalar_format(*t.subtangent);
  else
    j["subtangent"] = nullptr;  // horizontal tangent: no axis crossing
  j["intercept"] = scalar_format(t.intercept);
  j["tangent_line"] = "y = " + scalar_format(t.slope) + "*x + (" +
                      scalar_format(t.intercept) + ")";
  return j;
}

template <typename S>
Json paraphrase_json(const ParaphraseReport<S>& r) {
  Json j;
  j["at"] = scalar_format(r.x0);
  j["claimed_slope"] = scalar_format(r.claimed_slope);
  j["max_halvings"] = r.max_halvings;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json je;
    je["epsilon"] = scalar_format(e.epsilon);
    if (e.witness_dx)
      je["witness_dx"] = scalar_format(*e.witness_dx);
    else
      je["witness_dx"] = nullptr;
    if (e.achieved_error)
      je["achieved_error"] = scalar_format(*e.achieved_error);
    else
      je["achieved_error"] = nullptr;
    je["halvings_used"] = e.halvings_used;
    entries.push_back(std::move(je));
  }
  j["entries"] = entries;
  j["pass"] = r.pass;
  return j;
}

template <typename S>
Json transfer_json(const TransferReport<S>& r) {
  Json j;
  j["lhs"] = r.lhs_text;
  j["rhs"] = r.rhs_text;
  j["vars"] = r.vars;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  Json real;
  real["points"] = r.real_points;
  real["max_deviation"] = scalar_format(r.real_max_deviation);
  real["pass"] = r.real_pass;
  j["real"] = real;
  Json lc;
  lc["points"] = r.lc_points;
  lc["all_coefficients_agree"] = r.lc_all_coefficients_agree;
  lc["max_deviation"] = scalar_format(r.lc_max_deviation);
  lc["pass"] = r.lc_pass;
  j["lc"] = lc;
  j["pass"] = r.pass;
  return j;
}

}  // namespace fictio
