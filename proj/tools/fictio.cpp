// fictio command line: fictional quantities (imaginary radicals, truncated
// infinitesimals) with machine-checkable reports.
//
// Every subcommand is also a batch "kind": the flag layer only builds a JSON
// parameter object and hands it to the same handler the batch runner uses.
// Exit codes: 0 = ran and passed, 1 = ran but a mathematical check failed,
// 2 = the invocation itself was wrong (flags, config, malformed input).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "fictio/complex_quantity.hpp"
#include "fictio/config.hpp"
#include "fictio/cubic.hpp"
#include "fictio/derivative.hpp"
#include "fictio/errors.hpp"
#include "fictio/evaluate.hpp"
#include "fictio/expression.hpp"
#include "fictio/paraphrase.hpp"
#include "fictio/quadratic.hpp"
#include "fictio/rational.hpp"
#include "fictio/scalar.hpp"
#include "fictio/serialize.hpp"
#include "fictio/transfer.hpp"

namespace {

using fictio::Environment;
using fictio::Error;
using fictio::ExprPtr;
using fictio::Json;
using fictio::Mode;
using fictio::OutputFormat;
using fictio::Rational;
using fictio::RunConfig;
using fictio::UsageError;

// ---------- parameter extraction ---------------------------------------------

[[noreturn]] void usage_fail(const std::string& msg) { throw UsageError(msg); }

Rational json_rational(const Json& v, const std::string& what) {
  try {
    if (v.is_string()) return fictio::rational_from_string(v.get<std::string>());
    // nlohmann prints numbers shortest-round-trip, so 0.1 really reads back
    // as 1/10 and 40 as 40, not as a binary64 artifact.
    if (v.is_number()) return fictio::rational_from_string(v.dump());
  } catch (const Error& e) {
    usage_fail(what + ": " + e.what());
  }
  usage_fail(what + " must be a number or a numeric string");
}

const Json& require_key(const Json& p, const char* key) {
  const auto it = p.find(key);
  if (it == p.end()) usage_fail(std::string("missing parameter '") + key + "'");
  return *it;
}

Rational param_rational(const Json& p, const char* key) {
  return json_rational(require_key(p, key), std::string("parameter '") + key + "'");
}

std::string param_string(const Json& p, const char* key) {
  const Json& v = require_key(p, key);
  if (!v.is_string()) usage_fail(std::string("parameter '") + key + "' must be a string");
  return v.get<std::string>();
}

std::string param_string_or(const Json& p, const char* key, const std::string& dflt) {
  const auto it = p.find(key);
  if (it == p.end()) return dflt;
  if (!it->is_string()) usage_fail(std::string("parameter '") + key + "' must be a string");
  return it->get<std::string>();
}

int param_int_or(const Json& p, const char* key, int dflt) {
  const auto it = p.find(key);
  if (it == p.end()) return dflt;
  if (it->is_number_integer()) return it->get<int>();
  usage_fail(std::string("parameter '") + key + "' must be an integer");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(s.substr(start, comma == std::string::npos ? comma : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Accepts a comma-joined string, a JSON array, or a single number.
std::vector<Rational> param_rational_list(const Json& p, const char* key) {
  const Json& v = require_key(p, key);
  const std::string what = std::string("parameter '") + key + "'";
  std::vector<Rational> out;
  if (v.is_array()) {
    for (const auto& e : v) out.push_back(json_rational(e, what));
  } else if (v.is_number()) {
    out.push_back(json_rational(v, what));
  } else if (v.is_string()) {
    for (const auto& piece : split_commas(v.get<std::string>()))
      out.push_back(json_rational(Json(piece), what));
  } else {
    usage_fail(what + " must be a number list");
  }
  if (out.empty()) usage_fail(what + " must not be empty");
  return out;
}

std::vector<std::string> param_name_list(const Json& p, const char* key) {
  const Json& v = require_key(p, key);
  const std::string what = std::string("parameter '") + key + "'";
  std::vector<std::string> out;
  if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_string()) usage_fail(what + " must hold strings");
      out.push_back(trimmed(e.get<std::string>()));
    }
  } else if (v.is_string()) {
    for (const auto& piece : split_commas(v.get<std::string>())) out.push_back(trimmed(piece));
  } else {
    usage_fail(what + " must be a name list");
  }
  for (const auto& name : out)
    if (name.empty()) usage_fail(what + " has an empty name");
  if (out.empty()) usage_fail(what + " must not be empty");
  return out;
}

// Held bindings for free variables: {"a": "1", "k": 2.5, ...}.
template <typename S>
Environment<S> held_env(const Json& p) {
  Environment<S> env;
  const auto it = p.find("params");
  if (it == p.end()) return env;
  if (!it->is_object()) usage_fail("'params' must be an object of name/value bindings");
  for (const auto& [name, value] : it->items())
    env[name] = fictio::scalar_from_rational<S>(json_rational(value, "parameter '" + name + "'"));
  return env;
}

template <typename S>
Json held_json(const Environment<S>& env) {
  Json j = Json::object();
  for (const auto& [name, value] : env) j[name] = fictio::scalar_format(value);
  return j;
}

// ---------- handlers ----------------------------------------------------------

struct Outcome {
  Json report;
  bool pass = true;
};

using Handler = Outcome (*)(const Json&, const RunConfig&);

Json report_head(const char* kind, const RunConfig& cfg) {
  Json j;
  j["kind"] = kind;
  j["mode"] = fictio::mode_name(cfg.mode);
  return j;
}

Outcome run_solve_quadratic(const Json& p, const RunConfig& cfg) {
  const Rational b = param_rational(p, "b"), c = param_rational(p, "c");
  Json j = report_head("solve-quadratic", cfg);
  bool pass = true;
  if (cfg.mode == Mode::Exact) {
    const auto sol = fictio::solve_quadratic<Rational>(b, c);
    j.update(fictio::quadratic_json(sol));
    j["residuals_exactly_zero"] = fictio::quadratic_residuals_exactly_zero(sol);
    for (double r : sol.residuals()) pass = pass && r <= cfg.tolerance;
  } else {
    const auto sol =
        fictio::solve_quadratic<double>(fictio::rational_to_double(b), fictio::rational_to_double(c));
    j.update(fictio::quadratic_json(sol));
    for (double r : sol.residuals()) pass = pass && r <= cfg.tolerance;
  }
  return {std::move(j), pass};
}

Outcome run_solve_cubic(const Json& p, const RunConfig& cfg) {
  const bool depressed = p.contains("p") || p.contains("q");
  const bool general =
      p.contains("a") || p.contains("b") || p.contains("c") || p.contains("d");
  if (depressed == general)
    usage_fail("give either p/q (depressed t^3 = p t + q) or a/b/c/d (general cubic)");
  const int bound = param_int_or(p, "bound", 64);
  Json j = report_head("solve-cubic", cfg);
  bool pass = true;
  if (depressed) {
    const Rational P = param_rational(p, "p"), Q = param_rational(p, "q");
    const fictio::CubicSolution sol =
        cfg.mode == Mode::Exact
            ? fictio::solve_depressed_cubic_exact(P, Q, bound)
            : fictio::solve_depressed_cubic(fictio::rational_to_double(P),
                                            fictio::rational_to_double(Q));
    j.update(fictio::cubic_solution_json(sol));
    for (double r : sol.residuals) pass = pass && r <= cfg.tolerance;
  } else {
    const Rational A = param_rational(p, "a"), B = param_rational(p, "b");
    const Rational C = param_rational(p, "c"), D = param_rational(p, "d");
    const fictio::GeneralCubicSolution sol =
        cfg.mode == Mode::Exact
            ? fictio::solve_cubic_general_exact(A, B, C, D, bound)
            : fictio::solve_cubic_general(
                  fictio::rational_to_double(A), fictio::rational_to_double(B),
                  fictio::rational_to_double(C), fictio::rational_to_double(D));
    j.update(fictio::general_cubic_json(sol));
    for (double r : sol.residuals) pass = pass && r <= cfg.tolerance;
  }
  return {std::move(j), pass};
}

template <typename S>
Json depress_impl(const Json& p) {
  const S a = fictio::scalar_from_rational<S>(param_rational(p, "a"));
  const S b = fictio::scalar_from_rational<S>(param_rational(p, "b"));
  const S c = fictio::scalar_from_rational<S>(param_rational(p, "c"));
  const S d = fictio::scalar_from_rational<S>(param_rational(p, "d"));
  const auto dep = fictio::depress_cubic<S>(a, b, c, d);
  Json j;
  j["a"] = fictio::scalar_format(a);
  j["b"] = fictio::scalar_format(b);
  j["c"] = fictio::scalar_format(c);
  j["d"] = fictio::scalar_format(d);
  j["p"] = fictio::scalar_format(dep.p);
  j["q"] = fictio::scalar_format(dep.q);
  j["shift"] = fictio::scalar_format(dep.shift);
  return j;
}

Outcome run_depress(const Json& p, const RunConfig& cfg) {
  Json j = report_head("depress", cfg);
  j.update(cfg.mode == Mode::Exact ? depress_impl<Rational>(p) : depress_impl<double>(p));
  return {std::move(j), true};
}

Outcome run_bombelli_cbrt(const Json& p, const RunConfig& cfg) {
  (void)cfg;  // the search is exact whatever the arithmetic mode
  const Rational re = param_rational(p, "re"), im = param_rational(p, "im");
  const int bound = param_int_or(p, "bound", 64);
  const fictio::ComplexQuantity<Rational> z{re, im};
  const auto root = fictio::bombelli_extract_cbrt(z, bound);
  Json j;
  j["kind"] = "bombelli-cbrt";
  j["mode"] = "exact";
  Json zj;
  zj["re"] = fictio::rational_to_string(re);
  zj["im"] = fictio::rational_to_string(im);
  j["z"] = zj;
  j["search_bound"] = bound;
  j["found"] = root.has_value();
  if (root) {
    Json rj;
    rj["re"] = fictio::rational_to_string(root->re);
    rj["im"] = fictio::rational_to_string(root->im);
    j["root"] = rj;
    const auto cube = *root * *root * *root;
    Json cj;
    cj["re"] = fictio::rational_to_string(cube.re);
    cj["im"] = fictio::rational_to_string(cube.im);
    j["cube"] = cj;
  } else {
    j["root"] = nullptr;
  }
  return {std::move(j), root.has_value()};
}

Outcome run_trisect(const Json& p, const RunConfig& cfg) {
  const double chord = fictio::rational_to_double(param_rational(p, "chord"));
  const auto t = fictio::girard_trisect(chord);
  Json j = report_head("trisect", cfg);
  j.update(fictio::trisection_json(t));
  bool pass = true;
  for (double r : t.cubic.residuals) pass = pass && r <= cfg.tolerance;
  return {std::move(j), pass};
}

template <typename S>
Json diff_impl(const ExprPtr& tree, const std::string& var, const Json& p) {
  const S x0 = fictio::scalar_from_rational<S>(param_rational(p, "at"));
  const Environment<S> env = held_env<S>(p);
  Json j;
  j["at"] = fictio::scalar_format(x0);
  j["params"] = held_json(env);
  j["slope"] = fictio::scalar_format(fictio::differentiate<S>(tree, var, x0, env));
  return j;
}

Outcome run_diff(const Json& p, const RunConfig& cfg) {
  const std::string text = param_string(p, "expr");
  const std::string var = param_string_or(p, "var", "x");
  const ExprPtr tree = fictio::parse_expression(text);
  Json j = report_head("diff", cfg);
  j["expr"] = text;
  j["canonical"] = fictio::render_expression(tree);
  j["var"] = var;
  j.update(cfg.mode == Mode::Exact ? diff_impl<Rational>(tree, var, p)
                                   : diff_impl<double>(tree, var, p));
  return {std::move(j), true};
}

template <typename S>
Json tangent_impl(const ExprPtr& tree, const std::string& var, const Json& p) {
  const S x0 = fictio::scalar_from_rational<S>(param_rational(p, "at"));
  const Environment<S> env = held_env<S>(p);
  const auto t = fictio::tangent_data<S>(tree, var, x0, env);
  Json j;
  j["params"] = held_json(env);
  j.update(fictio::tangent_json(t));
  return j;
}

Outcome run_tangent(const Json& p, const RunConfig& cfg) {
  const std::string text = param_string(p, "expr");
  const std::string var = param_string_or(p, "var", "x");
  const ExprPtr tree = fictio::parse_expression(text);
  Json j = report_head("tangent", cfg);
  j["expr"] = text;
  j["canonical"] = fictio::render_expression(tree);
  j["var"] = var;
  j.update(cfg.mode == Mode::Exact ? tangent_impl<Rational>(tree, var, p)
                                   : tangent_impl<double>(tree, var, p));
  return {std::move(j), true};
}

template <typename S>
std::pair<Json, bool> paraphrase_impl(const ExprPtr& tree, const std::string& var,
                                      const Json& p) {
  const S x0 = fictio::scalar_from_rational<S>(param_rational(p, "at"));
  const S slope = fictio::scalar_from_rational<S>(param_rational(p, "slope"));
  std::vector<S> eps;
  for (const auto& r : param_rational_list(p, "eps"))
    eps.push_back(fictio::scalar_from_rational<S>(r));
  const int max_halvings = param_int_or(p, "max_halvings", 60);
  const Environment<S> env = held_env<S>(p);
  const auto report = fictio::paraphrase_check<S>(tree, var, x0, slope, eps, max_halvings, env);
  Json j;
  j["params"] = held_json(env);
  j.update(fictio::paraphrase_json(report));
  return {std::move(j), report.pass};
}

Outcome run_paraphrase_check(const Json& p, const RunConfig& cfg) {
  const std::string text = param_string(p, "expr");
  const std::string var = param_string_or(p, "var", "x");
  const ExprPtr tree = fictio::parse_expression(text);
  Json j = report_head("paraphrase-check", cfg);
  j["expr"] = text;
  j["canonical"] = fictio::render_expression(tree);
  j["var"] = var;
  auto [body, pass] = cfg.mode == Mode::Exact ? paraphrase_impl<Rational>(tree, var, p)
                                              : paraphrase_impl<double>(tree, var, p);
  j.update(body);
  return {std::move(j), pass};
}

template <typename S>
std::pair<Json, bool> transfer_impl(const ExprPtr& lhs, const ExprPtr& rhs, const Json& p,
                                    const RunConfig& cfg) {
  const std::vector<std::string> vars = param_name_list(p, "vars");
  const int trials = param_int_or(p, "trials", 100);
  const S tol = cfg.mode == Mode::Exact ? S(0) : fictio::scalar_from_rational<S>(
                                                     Rational(cfg.tolerance));
  const auto report = fictio::transfer_identity_check<S>(
      lhs, rhs, vars, trials, static_cast<unsigned long>(cfg.seed), tol);
  return {fictio::transfer_json(report), report.pass};
}

Outcome run_transfer_check(const Json& p, const RunConfig& cfg) {
  const ExprPtr lhs = fictio::parse_expression(param_string(p, "lhs"));
  const ExprPtr rhs = fictio::parse_expression(param_string(p, "rhs"));
  Json j = report_head("transfer-check", cfg);
  auto [body, pass] = cfg.mode == Mode::Exact ? transfer_impl<Rational>(lhs, rhs, p, cfg)
                                              : transfer_impl<double>(lhs, rhs, p, cfg);
  j.update(body);
  return {std::move(j), pass};
}

template <typename S>
std::pair<Json, bool> proportion_impl(const Json& p) {
  const S a = fictio::scalar_from_rational<S>(param_rational(p, "a"));
  const S b = fictio::scalar_from_rational<S>(param_rational(p, "b"));
  const S c = fictio::scalar_from_rational<S>(param_rational(p, "c"));
  const S d = fictio::scalar_from_rational<S>(param_rational(p, "d"));
  const auto r = fictio::check_proportion<S>(a, b, c, d);
  return {fictio::proportion_json(r), r.formal_holds};
}

Outcome run_proportion(const Json& p, const RunConfig& cfg) {
  Json j = report_head("proportion", cfg);
  auto [body, pass] =
      cfg.mode == Mode::Exact ? proportion_impl<Rational>(p) : proportion_impl<double>(p);
  j.update(body);
  return {std::move(j), pass};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"solve-quadratic", run_solve_quadratic},
      {"solve-cubic", run_solve_cubic},
      {"depress", run_depress},
      {"bombelli-cbrt", run_bombelli_cbrt},
      {"trisect", run_trisect},
      {"diff", run_diff},
      {"tangent", run_tangent},
      {"paraphrase-check", run_paraphrase_check},
      {"transfer-check", run_transfer_check},
      {"proportion", run_proportion},
  };
  return table;
}

// ---------- batch -------------------------------------------------------------

bool rationalish(const Json& v, Rational& out) {
  try {
    if (v.is_string()) {
      out = fictio::rational_from_string(v.get<std::string>());
      return true;
    }
    if (v.is_number()) {
      out = fictio::rational_from_string(v.dump());
      return true;
    }
  } catch (const Error&) {
  }
  return false;
}

void leaf_check(const Json& expected, const Json& actual, const std::string& path, double tol,
                std::vector<std::string>& failures) {
  const auto complain = [&] {
    failures.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
  };
  if (expected.is_boolean() || expected.is_null() || actual.is_boolean() || actual.is_null()) {
    if (expected != actual) complain();
    return;
  }
  Rational e, a;
  if (rationalish(expected, e) && rationalish(actual, a)) {
    // tol 0 means exact: an expected "1/3" only matches an actual "1/3".
    const bool ok = tol == 0 ? e == a : fictio::scalar_abs(Rational(e - a)) <= Rational(tol);
    if (!ok) complain();
    return;
  }
  if (expected != actual) complain();
}

// expected may be a scalar, {"value": v, "tol": t}, an array (element-wise),
// or an object (field-wise on the report).
void expect_walk(const Json& expected, const Json& actual, const std::string& path, double tol,
                 std::vector<std::string>& failures) {
  if (expected.is_object()) {
    const bool leaf_form =
        expected.contains("value") &&
        (expected.size() == 1 || (expected.size() == 2 && expected.contains("tol")));
    if (leaf_form) {
      double t = tol;
      if (expected.contains("tol"))
        t = fictio::rational_to_double(json_rational(expected.at("tol"), path + ".tol"));
      expect_walk(expected.at("value"), actual, path, t, failures);
      return;
    }
    if (!actual.is_object()) {
      failures.push_back(path + ": expected an object, got " + actual.dump());
      return;
    }
    for (const auto& [key, value] : expected.items()) {
      const std::string sub = path.empty() ? key : path + "." + key;
      if (!actual.contains(key)) {
        failures.push_back(sub + ": missing in report");
        continue;
      }
      expect_walk(value, actual.at(key), sub, tol, failures);
    }
    return;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) {
      failures.push_back(path + ": expected an array of " + std::to_string(expected.size()) +
                         ", got " + actual.dump());
      return;
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
      expect_walk(expected[i], actual[i], path + "[" + std::to_string(i) + "]", tol, failures);
    return;
  }
  leaf_check(expected, actual, path, tol, failures);
}

Json run_record(const std::string& text, std::size_t lineno, const RunConfig& cfg) {
  Json rec;
  rec["line"] = lineno;
  Json parsed;
  try {
    parsed = Json::parse(text);
  } catch (const std::exception& e) {
    rec["pass"] = false;
    Json err;
    err["type"] = "parse";
    err["message"] = e.what();
    rec["error"] = err;
    return rec;
  }
  try {
    if (!parsed.is_object()) usage_fail("record must be a JSON object");
    const std::string kind = param_string(parsed, "kind");
    const auto it = handlers().find(kind);
    if (it == handlers().end()) usage_fail("unknown kind '" + kind + "'");
    rec["kind"] = kind;
    RunConfig rcfg = cfg;
    if (parsed.contains("mode"))
      rcfg.mode = fictio::mode_from_name(param_string(parsed, "mode"));
    const Json params = parsed.contains("params") ? parsed.at("params") : Json::object();
    const Outcome outcome = it->second(params, rcfg);
    bool pass = outcome.pass;
    std::vector<std::string> failures;
    if (parsed.contains("expect")) {
      expect_walk(parsed.at("expect"), outcome.report, "", rcfg.tolerance, failures);
      if (!failures.empty()) pass = false;
    }
    rec["pass"] = pass;
    rec["report"] = outcome.report;
    if (!failures.empty()) rec["failures"] = failures;
    return rec;
  } catch (const Error& e) {
    rec["pass"] = false;
    rec["error"] = fictio::error_json(e)["error"];
    return rec;
  } catch (const std::exception& e) {
    rec["pass"] = false;
    Json err;
    err["type"] = "error";
    err["message"] = e.what();
    rec["error"] = err;
    return rec;
  }
}

Outcome run_batch(const std::string& path, int parallel, const RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) usage_fail("cannot open batch file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  const auto blank = [](const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
  };

  std::vector<Json> results(lines.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= lines.size()) return;
      if (blank(lines[i])) continue;
      results[i] = run_record(lines[i], i + 1, cfg);
    }
  };
  const int threads = std::max(1, parallel);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Json records = Json::array();
  int total = 0, passed = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    ++total;
    if (results[i].at("pass").get<bool>()) ++passed;
    records.push_back(std::move(results[i]));
  }

  Json j = report_head("batch", cfg);
  j["file"] = path;
  j["parallel"] = threads;
  j["records"] = std::move(records);
  Json summary;
  summary["total"] = total;
  summary["passed"] = passed;
  summary["failed"] = total - passed;
  j["summary"] = summary;
  return {std::move(j), passed == total};
}

// ---------- config + output ----------------------------------------------------

OutputFormat output_from_name(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "text") return OutputFormat::Text;
  usage_fail("unknown output format '" + name + "' (use json or text)");
}

void apply_config_json(RunConfig& cfg, const Json& j) {
  if (!j.is_object()) usage_fail("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "mode") {
      cfg.mode = fictio::mode_from_name(param_string(j, "mode"));
    } else if (key == "truncation_order") {
      if (!value.is_number_integer()) usage_fail("config truncation_order must be an integer");
      cfg.truncation_order = value.get<int>();
    } else if (key == "tolerance") {
      cfg.tolerance = fictio::rational_to_double(json_rational(value, "config tolerance"));
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !value.is_number_integer())
        usage_fail("config seed must be an integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "output") {
      cfg.output = output_from_name(param_string(j, "output"));
    } else {
      usage_fail("unknown config key '" + key + "'");
    }
  }
}

RunConfig load_env_config() {
  RunConfig cfg;
  const char* path = std::getenv("FICTIO_CONFIG");
  if (!path || !*path) return cfg;
  std::ifstream in(path);
  if (!in) usage_fail(std::string("cannot open config file '") + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    usage_fail(std::string("config file is not valid JSON: ") + e.what());
  }
  apply_config_json(cfg, j);
  return cfg;
}

void print_report(const Json& j, OutputFormat out) {
  if (out == OutputFormat::Json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
}

int fail_with(const Error& e, OutputFormat out, int code) {
  const Json j = fictio::error_json(e);
  if (out == OutputFormat::Json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << "error (" << j["error"]["type"].get<std::string>() << "): " << e.what() << "\n";
  if (code == 2) std::cerr << "error: " << e.what() << "\n";
  return code;
}

Json held_from_kv(const std::vector<std::string>& kvs) {
  Json held = Json::object();
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      usage_fail("--param expects name=value, got '" + kv + "'");
    held[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return held;
}

}  // namespace

int main(int argc, char** argv) {
  using fictio::mode_from_name;

  RunConfig cfg;
  try {
    cfg = load_env_config();
  } catch (const Error& e) {
    return fail_with(e, OutputFormat::Json, 2);
  }

  CLI::App app{"fictional quantities with checkable results: cubics through the "
               "imaginary radical, tangents through vanishing increments",
               "fictio"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", "fictio 0.1.0");

  std::string mode_s = fictio::mode_name(cfg.mode);
  int order = cfg.truncation_order;
  std::string tol_s = fictio::scalar_format(cfg.tolerance);
  std::uint64_t seed = cfg.seed;
  std::string output_s = cfg.output == OutputFormat::Json ? "json" : "text";

  app.add_option("--mode", mode_s, "arithmetic mode: exact rationals or binary64")
      ->check(CLI::IsMember({"exact", "numeric"}));
  app.add_option("--order", order, "number of epsilon coefficients carried (default 8)");
  app.add_option("--tol", tol_s, "tolerance for residual and comparison checks");
  app.add_option("--seed", seed, "seed for the sampling checks");
  app.add_option("--output", output_s, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  struct {
    std::string b, c;
  } quad;
  auto* s_quad = app.add_subcommand("solve-quadratic", "roots of x^2 + b x + c = 0 in surd form");
  s_quad->add_option("--b", quad.b, "linear coefficient")->required();
  s_quad->add_option("--c", quad.c, "constant coefficient")->required();

  struct {
    std::string p, q, a, b, c, d;
    int bound = 64;
  } cub;
  auto* s_cubic = app.add_subcommand(
      "solve-cubic", "roots of t^3 = p t + q (or a general cubic) via the Cardan formula");
  s_cubic->add_option("--p", cub.p, "depressed linear coefficient");
  s_cubic->add_option("--q", cub.q, "depressed constant");
  s_cubic->add_option("--a", cub.a, "cubic coefficient");
  s_cubic->add_option("--b", cub.b, "quadratic coefficient");
  s_cubic->add_option("--c", cub.c, "linear coefficient");
  s_cubic->add_option("--d", cub.d, "constant coefficient");
  s_cubic->add_option("--bound", cub.bound, "search bound for the rational cube-root hunt");

  struct {
    std::string a, b, c, d;
  } dep;
  auto* s_dep = app.add_subcommand("depress", "rewrite a x^3 + b x^2 + c x + d = 0 as t^3 = p t + q");
  s_dep->add_option("--a", dep.a, "cubic coefficient")->required();
  s_dep->add_option("--b", dep.b, "quadratic coefficient")->required();
  s_dep->add_option("--c", dep.c, "linear coefficient")->required();
  s_dep->add_option("--d", dep.d, "constant coefficient")->required();

  struct {
    std::string re, im;
    int bound = 64;
  } bom;
  auto* s_bom = app.add_subcommand("bombelli-cbrt",
                                   "exact rational a+bi with (a+bi)^3 equal to the given complex");
  s_bom->add_option("--re", bom.re, "real part")->required();
  s_bom->add_option("--im", bom.im, "imaginary part")->required();
  s_bom->add_option("--bound", bom.bound, "numerator/denominator search bound");

  struct {
    std::string chord;
  } tri;
  auto* s_tri = app.add_subcommand(
      "trisect", "chord of theta from the chord of 3*theta (unit radius), via x^3 = 3x - chord");
  s_tri->add_option("--chord", tri.chord, "chord of the triple angle, in (0, 2]")->required();

  struct {
    std::string expr, var = "x", at;
    std::vector<std::string> held;
  } dif, tan;
  auto* s_diff = app.add_subcommand(
      "diff", "slope from a vanishing increment: st((f(x+eps) - f(x)) / eps)");
  s_diff->add_option("--expr", dif.expr, "expression to differentiate")->required();
  s_diff->add_option("--var", dif.var, "variable of differentiation (default x)");
  s_diff->add_option("--at", dif.at, "abscissa")->required();
  s_diff->add_option("--param", dif.held, "held binding name=value (repeatable)");

  auto* s_tan = app.add_subcommand("tangent",
                                   "tangent line, subtangent, and intercept at a point");
  s_tan->add_option("--expr", tan.expr, "curve expression")->required();
  s_tan->add_option("--var", tan.var, "abscissa variable (default x)");
  s_tan->add_option("--at", tan.at, "abscissa")->required();
  s_tan->add_option("--param", tan.held, "held binding name=value (repeatable)");

  struct {
    std::string expr, var = "x", at, slope, eps;
    int max_halvings = 60;
    std::vector<std::string> held;
  } par;
  auto* s_par = app.add_subcommand(
      "paraphrase-check",
      "check a claimed slope with shrinking finite increments, no infinitesimals involved");
  s_par->add_option("--expr", par.expr, "curve expression")->required();
  s_par->add_option("--var", par.var, "abscissa variable (default x)");
  s_par->add_option("--at", par.at, "abscissa")->required();
  s_par->add_option("--slope", par.slope, "claimed slope")->required();
  s_par->add_option("--eps", par.eps, "comma-separated error bounds to witness")->required();
  s_par->add_option("--max-halvings", par.max_halvings, "rungs on the dx = 0.1 * 2^-k ladder");
  s_par->add_option("--param", par.held, "held binding name=value (repeatable)");

  struct {
    std::string lhs, rhs, vars;
    int trials = 100;
  } trans;
  auto* s_trans = app.add_subcommand(
      "transfer-check",
      "sample an identity over rationals, then again with infinitesimal parts mixed in");
  s_trans->add_option("--lhs", trans.lhs, "left side")->required();
  s_trans->add_option("--rhs", trans.rhs, "right side")->required();
  s_trans->add_option("--vars", trans.vars, "comma-separated free variables")->required();
  s_trans->add_option("--trials", trans.trials, "sample count per phase (default 100)");

  struct {
    std::string a, b, c, d;
  } prop;
  auto* s_prop = app.add_subcommand(
      "proportion", "a:b :: c:d by cross-multiplication, with the greater/less intuition check");
  s_prop->add_option("--a", prop.a, "first antecedent")->required();
  s_prop->add_option("--b", prop.b, "first consequent")->required();
  s_prop->add_option("--c", prop.c, "second antecedent")->required();
  s_prop->add_option("--d", prop.d, "second consequent")->required();

  struct {
    std::string file;
    int parallel = 1;
  } bat;
  auto* s_bat = app.add_subcommand("batch", "run a JSONL file of {kind, params, expect} records");
  s_bat->add_option("file", bat.file, "records file, one JSON object per line")->required();
  s_bat->add_option("--parallel", bat.parallel, "worker threads (order of results is unchanged)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.mode = mode_from_name(mode_s);
    cfg.truncation_order = order;
    fictio::set_lc_truncation_order(order);
    try {
      cfg.tolerance = fictio::rational_to_double(fictio::rational_from_string(tol_s));
    } catch (const Error& e) {
      usage_fail(std::string("--tol: ") + e.what());
    }
    if (!(cfg.tolerance >= 0)) usage_fail("--tol must be nonnegative");
    cfg.seed = seed;
    cfg.output = output_from_name(output_s);

    std::string kind;
    Json params = Json::object();
    if (s_quad->parsed()) {
      kind = "solve-quadratic";
      params["b"] = quad.b;
      params["c"] = quad.c;
    } else if (s_cubic->parsed()) {
      kind = "solve-cubic";
      if (s_cubic->count("--p")) params["p"] = cub.p;
      if (s_cubic->count("--q")) params["q"] = cub.q;
      if (s_cubic->count("--a")) params["a"] = cub.a;
      if (s_cubic->count("--b")) params["b"] = cub.b;
      if (s_cubic->count("--c")) params["c"] = cub.c;
      if (s_cubic->count("--d")) params["d"] = cub.d;
      if (s_cubic->count("--bound")) params["bound"] = cub.bound;
    } else if (s_dep->parsed()) {
      kind = "depress";
      params["a"] = dep.a;
      params["b"] = dep.b;
      params["c"] = dep.c;
      params["d"] = dep.d;
    } else if (s_bom->parsed()) {
      kind = "bombelli-cbrt";
      params["re"] = bom.re;
      params["im"] = bom.im;
      if (s_bom->count("--bound")) params["bound"] = bom.bound;
    } else if (s_tri->parsed()) {
      kind = "trisect";
      params["chord"] = tri.chord;
    } else if (s_diff->parsed()) {
      kind = "diff";
      params["expr"] = dif.expr;
      params["var"] = dif.var;
      params["at"] = dif.at;
      params["params"] = held_from_kv(dif.held);
    } else if (s_tan->parsed()) {
      kind = "tangent";
      params["expr"] = tan.expr;
      params["var"] = tan.var;
      params["at"] = tan.at;
      params["params"] = held_from_kv(tan.held);
    } else if (s_par->parsed()) {
      kind = "paraphrase-check";
      params["expr"] = par.expr;
      params["var"] = par.var;
      params["at"] = par.at;
      params["slope"] = par.slope;
      params["eps"] = par.eps;
      if (s_par->count("--max-halvings")) params["max_halvings"] = par.max_halvings;
      params["params"] = held_from_kv(par.held);
    } else if (s_trans->parsed()) {
      kind = "transfer-check";
      params["lhs"] = trans.lhs;
      params["rhs"] = trans.rhs;
      params["vars"] = trans.vars;
      if (s_trans->count("--trials")) params["trials"] = trans.trials;
    } else if (s_prop->parsed()) {
      kind = "proportion";
      params["a"] = prop.a;
      params["b"] = prop.b;
      params["c"] = prop.c;
      params["d"] = prop.d;
    }

    Outcome outcome;
    if (s_bat->parsed())
      outcome = run_batch(bat.file, bat.parallel, cfg);
    else
      outcome = handlers().at(kind)(params, cfg);
    print_report(outcome.report, cfg.output);
    return outcome.pass ? 0 : 1;
  } catch (const UsageError& e) {
    return fail_with(e, cfg.output, 2);
  } catch (const fictio::ParseError& e) {
    return fail_with(e, cfg.output, 2);
  } catch (const Error& e) {
    return fail_with(e, cfg.output, 1);
  } catch (const std::exception& e) {
    return fail_with(Error(std::string("unexpected: ") + e.what()), cfg.output, 1);
  }
}
