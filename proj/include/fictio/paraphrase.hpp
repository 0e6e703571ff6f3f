#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fictio/evaluate.hpp"

namespace fictio {

// "For any error bound you assign, there is a finite difference dx whose
// quotient lands within it."  The checker makes that sentence operational:
// dx runs down the halving ladder 0.1 * 2^-k, k = 0..max_halvings, and for
// each requested bound eps we look for the smallest rung from which the
// quotient error stays below eps for the REST of the ladder.  Demanding a
// stable suffix instead of a single lucky rung keeps accidental hits (a
// wrong claimed slope that one particular dx happens to satisfy) from
// certifying the claim, and it preserves monotonicity: a witness for eps is
// a witness for every larger bound.  Absence of a witness is reported, not
// proven -- the ladder is finite.
template <typename S>
struct ParaphraseEntry {
  S epsilon{};
  std::optional<S> witness_dx;       // 0.1 * 2^-k at the witness rung
  std::optional<S> achieved_error;   // error at the witness, else best seen
  int halvings_used = 0;             // witness rung k, else max_halvings
};

template <typename S>
struct ParaphraseReport {
  S x0{};
  S claimed_slope{};
  int max_halvings = 60;
  std::vector<ParaphraseEntry<S>> entries;
  bool pass = false;  // every epsilon got a witness
};

namespace detail {

// The evaluation scalar: exact stays exact; binary64 widens to long double
// so quotient cancellation noise sits safely below the 1e-8 bounds the
// checks run at.
template <typename S>
struct wide_scalar {
  using type = S;
};
template <>
struct wide_scalar<double> {
  using type = long double;
};

template <typename S>
S paraphrase_half(const S& v) {
  if constexpr (scalar_is_exact_v<S>)
    return v / S(2);
  else
    return v * S(0.5);
}

// Deepest usable rung: exact arithmetic has no floor, but a floating-point
// difference quotient loses the signal to round-off once dx sinks below
// about sqrt(machine epsilon) * scale -- past that, reported errors measure
// the arithmetic, not the claim, and demanding a stable suffix across them
// would wrongly reject true slopes.  The ladder simply stops there.
template <typename W, typename S>
int ladder_depth(int max_halvings, const S& x0) {
  if constexpr (scalar_is_exact_v<W>) {
    (void)x0;
    return max_halvings;
  } else {
    const W scale = std::max(W(1), scalar_abs(W(x0)));
    const W floor = std::sqrt(std::numeric_limits<W>::epsilon()) * scale;
    int k = 0;
    W dx = W(1) / W(10);
    while (k < max_halvings && dx * W(0.5) >= floor) {
      dx *= W(0.5);
      ++k;
    }
    return k;
  }
}

}  // namespace detail

template <typename S>
ParaphraseReport<S> paraphrase_check(const ExprPtr& expr, const std::string& var, const S& x0,
                                     const S& claimed_slope, const std::vector<S>& eps_list,
                                     int max_halvings = 60, const Environment<S>& env = {}) {
  if (max_halvings < 1) throw UsageError("max_halvings must be at least 1");
  for (const auto& e : eps_list)
    if (!(scalar_sign(e) > 0)) throw UsageError("error bounds must be positive");

  using W = typename detail::wide_scalar<S>::type;
  ParaphraseReport<S> report;
  report.x0 = x0;
  report.claimed_slope = claimed_slope;
  report.max_halvings = max_halvings;

  // One shared evaluation ladder; a rung whose evaluation fails simply has
  // no error value, so it can carry no suffix (per-eps isolation for free).
  Environment<W> wide;
  for (const auto& [name, value] : env) wide[name] = W(value);
  const W wx0 = W(x0);
  const W wclaim = W(claimed_slope);
  const int depth = detail::ladder_depth<W>(max_halvings, x0);
  std::vector<std::optional<W>> err(static_cast<std::size_t>(depth) + 1);
  std::optional<W> f0;
  try {
    wide[var] = wx0;
    f0 = evaluate<W>(expr, wide);
  } catch (const Error&) {
    // no base value: every rung stays empty
  }
  if (f0) {
    W dx = W(S(1)) / W(S(10));  // the initial step, exact in exact mode
    for (int k = 0; k <= depth; ++k) {
      try {
        wide[var] = wx0 + dx;
        const W fk = evaluate<W>(expr, wide);
        const W quotient = (fk - *f0) / dx;
        const W deviation = quotient - wclaim;
        err[static_cast<std::size_t>(k)] =
            scalar_sign(deviation) < 0 ? W(-deviation) : deviation;
      } catch (const Error&) {
        // rung unusable
      }
      dx = detail::paraphrase_half(dx);
    }
  }

  report.pass = true;
  for (const auto& eps : eps_list) {
    ParaphraseEntry<S> entry;
    entry.epsilon = eps;
    const W weps = W(eps);

    int witness = depth + 1;
    for (int k = depth; k >= 0; --k) {
      const auto& e = err[static_cast<std::size_t>(k)];
      if (e && *e < weps)
        witness = k;
      else
        break;
    }

    if (witness <= depth) {
      S dx = S(1) / S(10);
      for (int k = 0; k < witness; ++k) dx = detail::paraphrase_half(dx);
      entry.witness_dx = dx;
      entry.achieved_error = S(*err[static_cast<std::size_t>(witness)]);
      entry.halvings_used = witness;
    } else {
      entry.halvings_used = depth;
      std::optional<W> best;
      for (const auto& e : err)
        if (e && (!best || *e < *best)) best = *e;
      if (best) entry.achieved_error = S(*best);
      report.pass = false;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace fictio
