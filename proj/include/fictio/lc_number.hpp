#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fictio/errors.hpp"
#include "fictio/scalar.hpp"

namespace fictio {

// Truncation order N: every nonzero number carries exactly N coefficients
// starting at its own valuation, so precision is relative to magnitude and
// truncated multiplication stays associative on the guaranteed window.
// Global, set once at startup; operations treat it as read-only.
int lc_truncation_order();
void set_lc_truncation_order(int n);  // n >= 2

enum class Magnitude { Infinitesimal, Appreciable, Infinite };
enum class Ordering { Less, Equal, Greater };

inline const char* magnitude_name(Magnitude m) {
  switch (m) {
    case Magnitude::Infinitesimal: return "infinitesimal";
    case Magnitude::Appreciable: return "appreciable";
    case Magnitude::Infinite: return "infinite";
  }
  return "?";
}

// A truncated formal power series in the infinitesimal eps with scalar
// coefficients: sum of coeff[i] * eps^(valuation + i), i = 0..N-1.
//
// precision_order is the largest exponent whose coefficient is guaranteed.
// Freshly constructed values get valuation + N - 1; cancelling additions can
// lower it.  Coefficients stored above precision_order are kept as zero and
// must not be trusted.  Zero is a distinguished representation without
// valuation: an exact zero (precision nullopt) is zero at every order, while
// a zero produced by total cancellation only vouches for exponents up to its
// precision_order.
template <typename S>
class LCNumber {
 public:
  LCNumber() = default;  // exact zero

  static LCNumber zero() { return LCNumber(); }

  static LCNumber from_scalar(const S& r) { return monomial(r, 0); }

  static LCNumber monomial(const S& c, int k) {
    if (scalar_is_zero(c)) return LCNumber();
    check_valuation(k);
    const int n = lc_truncation_order();
    LCNumber x;
    x.val_ = k;
    x.coeffs_.assign(static_cast<std::size_t>(n), S(0));
    x.coeffs_[0] = c;
    x.prec_ = k + n - 1;
    return x;
  }

  static LCNumber epsilon() { return monomial(S(1), 1); }

  // Exact construction from a coefficient window starting at `valuation`.
  // At most N coefficients; the result gets fresh construction precision.
  static LCNumber from_coefficients(int valuation, std::vector<S> coeffs) {
    const int n = lc_truncation_order();
    if (coeffs.size() > static_cast<std::size_t>(n))
      throw RangeError("more coefficients than the truncation order allows");
    std::size_t lead = 0;
    while (lead < coeffs.size() && scalar_is_zero(coeffs[lead])) ++lead;
    if (lead == coeffs.size()) return LCNumber();
    const int v = valuation + static_cast<int>(lead);
    check_valuation(v);
    LCNumber x;
    x.val_ = v;
    x.coeffs_.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(lead), coeffs.end());
    x.coeffs_.resize(static_cast<std::size_t>(n), S(0));
    x.prec_ = v + n - 1;
    return x;
  }

  bool is_zero() const { return coeffs_.empty(); }

  int valuation() const {
    if (is_zero()) throw DomainError("zero has no valuation");
    return val_;
  }

  // nullopt: guaranteed at every order (only exact zero).
  std::optional<int> precision_order() const { return prec_; }

  // Coefficient of eps^k; zero outside the stored window.  The caller is
  // responsible for honoring precision_order.
  S coefficient(int k) const {
    if (is_zero() || k < val_) return S(0);
    const std::size_t i = static_cast<std::size_t>(k - val_);
    return i < coeffs_.size() ? coeffs_[i] : S(0);
  }

  friend LCNumber lc_neg(const LCNumber& x) {
    LCNumber r = x;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend LCNumber lc_add(const LCNumber& x, const LCNumber& y) {
    if (x.is_zero() && y.is_zero()) {
      if (!x.prec_ && !y.prec_) return LCNumber();
      // One side is only known zero through its window.
      int p = !x.prec_ ? *y.prec_ : !y.prec_ ? *x.prec_ : std::min(*x.prec_, *y.prec_);
      return cancellation_zero(p);
    }
    if (x.is_zero()) return add_zero(x, y);
    if (y.is_zero()) return add_zero(y, x);

    const int prec = std::min(*x.prec_, *y.prec_);
    const int lo = std::min(x.val_, y.val_);
    std::vector<S> window;
    window.reserve(static_cast<std::size_t>(prec - lo + 1));
    for (int k = lo; k <= prec; ++k) window.push_back(x.coefficient(k) + y.coefficient(k));
    return build(lo, std::move(window), prec);
  }

  friend LCNumber lc_sub(const LCNumber& x, const LCNumber& y) { return lc_add(x, lc_neg(y)); }

  friend LCNumber lc_mul(const LCNumber& x, const LCNumber& y) {
    if (x.is_zero() || y.is_zero()) {
      // Exact zero absorbs everything; a cancellation zero scales its window.
      const LCNumber* z = x.is_zero() ? &x : &y;
      const LCNumber* w = x.is_zero() ? &y : &x;
      if (!z->prec_) return LCNumber();
      if (w->is_zero()) {
        if (!w->prec_) return LCNumber();
        return cancellation_zero(*z->prec_ + *w->prec_ + 1);
      }
      return cancellation_zero(*z->prec_ + w->val_);
    }
    check_valuation(x.val_ + y.val_);
    const int v = x.val_ + y.val_;
    const int prec = std::min(*x.prec_ + y.val_, *y.prec_ + x.val_);
    std::vector<S> window(static_cast<std::size_t>(prec - v + 1), S(0));
    const int nx = static_cast<int>(x.coeffs_.size());
    const int ny = static_cast<int>(y.coeffs_.size());
    for (int i = 0; i < nx; ++i) {
      if (scalar_is_zero(x.coeffs_[static_cast<std::size_t>(i)])) continue;
      for (int j = 0; j < ny; ++j) {
        const int k = x.val_ + i + y.val_ + j;
        if (k > prec) break;
        window[static_cast<std::size_t>(k - v)] +=
            x.coeffs_[static_cast<std::size_t>(i)] * y.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    return build(v, std::move(window), prec);
  }

  // Reciprocal via the truncated geometric series on the relative tail.
  friend LCNumber lc_inv(const LCNumber& x) {
    if (x.is_zero()) {
      if (!x.prec_) throw DivisionByZero("reciprocal of zero");
      throw PrecisionExhausted(
          "reciprocal of a value indistinguishable from zero (order <= " +
          std::to_string(*x.prec_) + ")");
    }
    const int n = lc_truncation_order();
    const int m = std::min(n - 1, *x.prec_ - x.val_);  // relative orders kept
    const S& lead = x.coeffs_[0];
    std::vector<S> u(static_cast<std::size_t>(m) + 1, S(0));
    for (int j = 1; j <= m; ++j) u[static_cast<std::size_t>(j)] = x.coeffs_[static_cast<std::size_t>(j)] / lead;
    std::vector<S> w(static_cast<std::size_t>(m) + 1, S(0));
    w[0] = S(1);
    for (int k = 1; k <= m; ++k) {
      S acc = S(0);
      for (int j = 1; j <= k; ++j) acc += u[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(k - j)];
      w[static_cast<std::size_t>(k)] = -acc;
    }
    check_valuation(-x.val_);
    for (auto& c : w) c = c / lead;
    return build(-x.val_, std::move(w), -x.val_ + m);
  }

  // sqrt(c) * eps^(v/2) * (1 + u)^(1/2) by the recurrence for the binomial
  // series.  Requires even valuation and a positive leading coefficient that
  // the scalar type can take the root of.
  friend LCNumber lc_sqrt(const LCNumber& x) {
    if (x.is_zero()) {
      if (!x.prec_) return LCNumber();
      throw DomainError("sqrt of a value indistinguishable from zero");
    }
    if (x.val_ % 2 != 0)
      throw DomainError("sqrt needs an even valuation, got " + std::to_string(x.val_));
    if (scalar_sign(x.coeffs_[0]) <= 0)
      throw DomainError("sqrt needs a positive leading coefficient");
    auto lead_root = scalar_sqrt(x.coeffs_[0]);
    if (!lead_root)
      throw DomainError("leading coefficient has no square root in this scalar mode");
    const int n = lc_truncation_order();
    const int m = std::min(n - 1, *x.prec_ - x.val_);
    const S& lead = x.coeffs_[0];
    std::vector<S> u(static_cast<std::size_t>(m) + 1, S(0));
    for (int j = 1; j <= m; ++j) u[static_cast<std::size_t>(j)] = x.coeffs_[static_cast<std::size_t>(j)] / lead;
    // s_0 = 1, and (1+u) = s^2 gives s_k = (u_k - sum_{j=1..k-1} s_j s_{k-j}) / 2.
    std::vector<S> s(static_cast<std::size_t>(m) + 1, S(0));
    s[0] = S(1);
    for (int k = 1; k <= m; ++k) {
      S acc = u[static_cast<std::size_t>(k)];
      for (int j = 1; j < k; ++j) acc -= s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
      s[static_cast<std::size_t>(k)] = acc / S(2);
    }
    for (auto& c : s) c = c * *lead_root;
    const int v = x.val_ / 2;
    return build(v, std::move(s), v + m);
  }

  friend Ordering lc_cmp(const LCNumber& x, const LCNumber& y) {
    LCNumber d = lc_sub(x, y);
    if (d.is_zero()) {
      if (!d.prec_) return Ordering::Equal;
      throw PrecisionExhausted(
          "difference cancels through the whole guaranteed window (order <= " +
          std::to_string(*d.prec_) + ")");
    }
    return scalar_sign(d.coeffs_[0]) > 0 ? Ordering::Greater : Ordering::Less;
  }

  friend S standard_part(const LCNumber& x) {
    if (x.is_zero()) return S(0);
    if (x.val_ < 0)
      throw DomainError("standard part of an infinite quantity (valuation " +
                        std::to_string(x.val_) + ")");
    return x.coefficient(0);
  }

  friend Magnitude classify(const LCNumber& x) {
    if (x.is_zero() || x.val_ > 0) return Magnitude::Infinitesimal;
    return x.val_ < 0 ? Magnitude::Infinite : Magnitude::Appreciable;
  }

  // Structural identity (bit-for-bit reruns in exact mode).
  friend bool identical(const LCNumber& x, const LCNumber& y) {
    return x.val_ == y.val_ && x.prec_ == y.prec_ && x.coeffs_ == y.coeffs_;
  }

  // Largest |x_k - y_k| over the window both sides guarantee.
  friend S guaranteed_deviation(const LCNumber& x, const LCNumber& y) {
    std::optional<int> bound;
    if (x.prec_) bound = *x.prec_;
    if (y.prec_) bound = bound ? std::min(*bound, *y.prec_) : *y.prec_;
    int lo = 0, hi = -1;
    if (!x.is_zero() || !y.is_zero()) {
      const int n = lc_truncation_order();
      lo = !x.is_zero() ? x.val_ : y.val_;
      hi = lo + n - 1;
      if (!x.is_zero() && !y.is_zero()) {
        lo = std::min(x.val_, y.val_);
        hi = std::max(x.val_, y.val_) + n - 1;
      }
      if (bound) hi = std::min(hi, *bound);
    }
    S worst = S(0);
    for (int k = lo; k <= hi; ++k) {
      S d = scalar_abs(x.coefficient(k) - y.coefficient(k));
      if (d > worst) worst = d;
    }
    return worst;
  }

  friend bool coefficients_agree(const LCNumber& x, const LCNumber& y, const S& tol) {
    return !(guaranteed_deviation(x, y) > tol);
  }

  // Debug/report rendering: "3 + 5*eps + O(eps^8)".
  std::string str() const {
    if (is_zero()) {
      if (!prec_) return "0";
      return "0 + O(eps^" + std::to_string(*prec_ + 1) + ")";
    }
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const int k = val_ + static_cast<int>(i);
      if (k > *prec_) break;
      if (scalar_is_zero(coeffs_[i])) continue;
      if (!out.empty()) out += " + ";
      out += scalar_format(coeffs_[i]);
      if (k == 1)
        out += "*eps";
      else if (k != 0)
        out += "*eps^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    out += " + O(eps^" + std::to_string(*prec_ + 1) + ")";
    return out;
  }

  LCNumber operator+(const LCNumber& o) const { return lc_add(*this, o); }
  LCNumber operator-(const LCNumber& o) const { return lc_sub(*this, o); }
  LCNumber operator*(const LCNumber& o) const { return lc_mul(*this, o); }
  LCNumber operator/(const LCNumber& o) const { return lc_mul(*this, lc_inv(o)); }
  LCNumber operator-() const { return lc_neg(*this); }

  // Used by the integral evaluator when a series was truncated early.
  LCNumber with_precision_capped(int p) const {
    if (is_zero()) {
      if (!prec_ || *prec_ > p) return cancellation_zero(p);
      return *this;
    }
    if (*prec_ <= p) return *this;
    std::vector<S> window(coeffs_.begin(), coeffs_.end());
    return build(val_, std::move(window), p);
  }

 private:
  static void check_valuation(int v) {
    if (v > 1000000 || v < -1000000)
      throw RangeError("valuation out of range: " + std::to_string(v));
  }

  static LCNumber cancellation_zero(int p) {
    LCNumber z;
    z.prec_ = p;
    return z;
  }

  // x is zero (with finite precision), y is nonzero.
  static LCNumber add_zero(const LCNumber& x, const LCNumber& y) {
    if (!x.prec_) return y;
    if (y.val_ > *x.prec_) return cancellation_zero(*x.prec_);
    const int prec = std::min(*x.prec_, *y.prec_);
    std::vector<S> window;
    for (int k = y.val_; k <= prec; ++k) window.push_back(y.coefficient(k));
    return build(y.val_, std::move(window), prec);
  }

  // Normalizes a dense window [val0, val0+window.size()) whose entries are
  // only meaningful up to `prec`: trims leading zeros, detects total
  // cancellation, pads to N stored slots, zeroes anything above prec.
  static LCNumber build(int val0, std::vector<S> window, int prec) {
    const int n = lc_truncation_order();
    std::size_t lead = 0;
    while (lead < window.size() && val0 + static_cast<int>(lead) <= prec &&
           scalar_is_zero(window[lead]))
      ++lead;
    const int v = val0 + static_cast<int>(lead);
    if (lead == window.size() || v > prec) return cancellation_zero(prec);
    check_valuation(v);
    LCNumber x;
    x.val_ = v;
    x.prec_ = prec;
    x.coeffs_.assign(static_cast<std::size_t>(n), S(0));
    for (std::size_t i = lead; i < window.size(); ++i) {
      const int k = val0 + static_cast<int>(i);
      if (k > prec || k >= v + n) break;
      x.coeffs_[static_cast<std::size_t>(k - v)] = window[i];
    }
    return x;
  }

  int val_ = 0;
  std::vector<S> coeffs_;        // empty <=> zero
  std::optional<int> prec_;      // nullopt <=> exact zero
};

}  // namespace fictio
