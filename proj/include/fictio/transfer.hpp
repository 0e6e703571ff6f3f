#pragma once

#include <random>
#include <string>
#include <vector>

#include "fictio/evaluate.hpp"

namespace fictio {

// Equational transfer at desk scale: an identity that holds at sampled real
// points should keep holding, coefficient by coefficient, when the sample
// points are nudged off the real line by an infinitesimal.  Sampling uses
// small-height rationals (numerator in [-100, 100], denominator in
// [1, 100]) so exact mode stays exact; LC samples are r + r'*eps with the
// same bounds.  Points where either side fails to evaluate (poles of a
// rational identity, say) are resampled, with a hard cap of 10x the
// requested trials.
template <typename S>
struct TransferReport {
  std::string lhs_text, rhs_text;
  std::vector<std::string> vars;
  int trials = 0;
  unsigned long seed = 0;

  int real_points = 0;           // points actually checked (after resampling)
  S real_max_deviation{};        // max |lhs - rhs| over real samples
  bool real_pass = false;

  int lc_points = 0;
  bool lc_all_coefficients_agree = false;
  S lc_max_deviation{};          // max guaranteed-window coefficient gap
  bool lc_pass = false;

  bool pass = false;
};

namespace detail {

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 100);
  return Rational(num(rng), den(rng));
}

}  // namespace detail

// tol is ignored in exact mode (equality must be exact); in numeric mode it
// bounds both the real deviation and the guaranteed-coefficient deviation.
template <typename S>
TransferReport<S> transfer_identity_check(const ExprPtr& lhs, const ExprPtr& rhs,
                                          const std::vector<std::string>& vars, int trials,
                                          unsigned long seed, const S& tol) {
  if (trials < 1) throw UsageError("trials must be at least 1");
  using V = LCNumber<S>;
  TransferReport<S> report;
  report.lhs_text = render_expression(lhs);
  report.rhs_text = render_expression(rhs);
  report.vars = vars;
  report.trials = trials;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  const long cap = 10L * trials;

  // Real side.
  {
    long attempts = 0;
    int done = 0;
    S worst = S(0);
    bool ok = true;
    while (done < trials) {
      if (++attempts > cap)
        throw SamplingError("could not find " + std::to_string(trials) +
                            " evaluable real sample points in " + std::to_string(cap) +
                            " attempts");
      Environment<S> env;
      for (const auto& v : vars) env[v] = scalar_from_rational<S>(detail::small_rational(rng));
      S d;
      try {
        d = scalar_abs(evaluate<S>(lhs, env) - evaluate<S>(rhs, env));
      } catch (const Error&) {
        continue;  // resample
      }
      ++done;
      if (d > worst) worst = d;
      if (scalar_is_exact_v<S> ? !scalar_is_zero(d) : d > tol) ok = false;
    }
    report.real_points = done;
    report.real_max_deviation = worst;
    report.real_pass = ok;
  }

  // Infinitesimal side: r + r'*eps sample points.
  {
    long attempts = 0;
    int done = 0;
    S worst = S(0);
    bool ok = true;
    while (done < trials) {
      if (++attempts > cap)
        throw SamplingError("could not find " + std::to_string(trials) +
                            " evaluable lc sample points in " + std::to_string(cap) +
                            " attempts");
      Environment<V> env;
      for (const auto& v : vars) {
        const S r = scalar_from_rational<S>(detail::small_rational(rng));
        const S r1 = scalar_from_rational<S>(detail::small_rational(rng));
        env[v] = V::from_scalar(r) + V::from_scalar(r1) * V::epsilon();
      }
      S dev;
      try {
        const V d = evaluate<V>(lhs, env) - evaluate<V>(rhs, env);
        dev = guaranteed_deviation(d, V::zero());
      } catch (const Error&) {
        continue;  // resample
      }
      ++done;
      if (dev > worst) worst = dev;
      if (scalar_is_exact_v<S> ? !scalar_is_zero(dev) : dev > tol) ok = false;
    }
    report.lc_points = done;
    report.lc_max_deviation = worst;
    report.lc_all_coefficients_agree = ok;
    report.lc_pass = ok;
  }

  report.pass = report.real_pass && report.lc_pass;
  return report;
}

}  // namespace fictio
