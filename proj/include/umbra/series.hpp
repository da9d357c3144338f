#pragma once

#include <span>
#include <string>
#include <vector>

#include "umbra/gen_series.hpp"
#include "umbra/rational.hpp"

namespace umbra {

/// Univariate formal power series known up to t^order:
///   sum_{n <= order} c_n t^n + O(t^{order+1}).
/// Ordinary coefficients c_n are stored; the exponential-generating view
/// A_n = n! c_n is computed on demand. Binary operations truncate to the
/// smaller order.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  /// Zero series known to the given order.
  explicit TruncatedSeries(int order);
  /// Ordinary coefficients c_0, c_1, ...; zero-padded up to `order`.
  TruncatedSeries(int order, std::vector<Rational> coeffs);

  static TruncatedSeries from_egf(int order, std::span<const Rational> egf);
  static TruncatedSeries constant(const Rational& c, int order);
  /// The series t.
  static TruncatedSeries identity(int order);
  static TruncatedSeries monomial(int degree, const Rational& c, int order);
  /// e^t.
  static TruncatedSeries exp_t(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Ordinary coefficient c_n. Throws OrderTooSmall beyond the known order.
  const Rational& operator[](int n) const;
  /// EGF coefficient A_n = n! c_n. Throws OrderTooSmall beyond the known order.
  Rational egf(int n) const;
  std::vector<Rational> egf_coeffs() const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_delta() const { return coeffs_[0].is_zero() && order() >= 1 && !coeffs_[1].is_zero(); }
  bool is_unit() const { return !coeffs_[0].is_zero(); }
  bool is_zero() const;

  TruncatedSeries truncated(int order) const;
  /// d/dt; order drops by one (clamped at zero).
  TruncatedSeries derivative() const;
  Rational evaluate_polynomial(const Rational& t) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Ordinary coefficients as "c0,c1,...".
  std::string to_csv() const;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; requires c_0 != 0 (ZeroConstantTerm).
TruncatedSeries mul_inverse(const TruncatedSeries& c);

/// a(b(t)); requires b_0 = 0 (InnerConstantTerm).
TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b);

/// Compositional inverse of a delta series (NotDeltaSeries otherwise),
/// solved one coefficient at a time from B(Bbar(t)) = t.
TruncatedSeries comp_inverse(const TruncatedSeries& b);

/// EGF index shift: the result has EGF coefficients A'_k = A_{k+n}. For n >= 1
/// this is the n-th derivative, for n < 0 an iterated antiderivative whose
/// integration constants are A_{-1}, A_{-2}, ... taken from `below`
/// (below[j] = A_{-(j+1)}), zero where not supplied.
TruncatedSeries shift_egf(const TruncatedSeries& a, int n, std::span<const Rational> below = {});

/// B*(t) = B'(Bbar(t)) for a delta series B.
TruncatedSeries b_star(const TruncatedSeries& b);

/// exp(a) for a_0 = 0 (NonzeroConstantTerm otherwise).
TruncatedSeries exp_series(const TruncatedSeries& a);

/// log(c) for c_0 = 1 (ConstantTermNotOne otherwise).
TruncatedSeries log_series(const TruncatedSeries& c);

// Formal Taylor expansions in an auxiliary parameter w. Coefficients are
// series in the original variable.

/// e^{w d/dx} h(x) = sum_k h^{(k)}(x) w^k / k!, to w-order h.order().
GenSeries<TruncatedSeries> taylor_expand(const TruncatedSeries& h);

/// sum_n f^{(n)}(g(x))/n! * (sum_{m>=1} g^{(m)}(x) w^m/m!)^n to w-order
/// `w_order`, the higher-derivative generating function of f(g(x)).
/// Requires g_0 = 0.
GenSeries<TruncatedSeries> composite_derivative_expansion(const TruncatedSeries& f,
                                                          const TruncatedSeries& g, int w_order);

}  // namespace umbra
