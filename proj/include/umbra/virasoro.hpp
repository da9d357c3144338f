#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "umbra/gen_series.hpp"
#include "umbra/poly_ring.hpp"
#include "umbra/rational.hpp"
#include "umbra/series.hpp"
#include "umbra/univar_poly.hpp"

namespace umbra {

/// Element of y*C[x_1, x_2, ...]. The single factor y is implicit; only the
/// x_j exponents are stored.
class FockPoly {
 public:
  using Terms = std::map<ExponentList, Rational>;

  FockPoly() = default;
  /// The lowest weight vector y.
  static FockPoly vacuum();
  /// c * y * prod x_j^{e_j}.
  static FockPoly monomial(ExponentList exponents, const Rational& c = Rational(1));

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// x_j * p.
  FockPoly times_x(int j) const;
  /// d/dx_j p.
  FockPoly partial_x(int j) const;

  FockPoly operator-() const;
  FockPoly& operator+=(const FockPoly& o);
  FockPoly& operator-=(const FockPoly& o);
  FockPoly& operator*=(const Rational& s);
  friend FockPoly operator+(FockPoly a, const FockPoly& b) { return a += b; }
  friend FockPoly operator-(FockPoly a, const FockPoly& b) { return a -= b; }
  friend FockPoly operator*(FockPoly a, const Rational& s) { return a *= s; }
  friend FockPoly operator*(const Rational& s, FockPoly a) { return a *= s; }
  friend bool operator==(const FockPoly&, const FockPoly&) = default;

  /// Embeds y -> y_i inside the big ring.
  MultiPoly to_multipoly(int y_index = 0) const;
  /// Inverse of the embedding up to the y-index: every term must have
  /// y-degree exactly one and no plain variables; y_i is collapsed to y.
  static FockPoly collapse_y(const MultiPoly& p);

  std::string str() const;

 private:
  void add_term(const ExponentList& m, const Rational& c);
  Terms terms_;
};

/// Heisenberg generator h(n) with alpha(n) = 1/(n-1)!, beta(n) = n!:
/// n < 0 multiplies by x_{-n}/(-n-1)!, n > 0 applies n! d/dx_n, h(0) = id.
FockPoly h_op(int n, const FockPoly& p);

/// Quadratic Virasoro operator L(m) (central charge 1). For m != 0 the sum
/// (1/2) sum_k h(m-k) h(k) runs over the finitely many k acting nonzero on
/// each monomial; L(0) uses the normal-ordered form.
FockPoly L_op(int m, const FockPoly& p);

/// The k values for which h(m-k) h(k) can act nonzero on the monomial.
std::vector<int> active_modes(int m, const ExponentList& monomial);

/// L(0)-eigenvalue 1/2 + sum j*e_j; NotHomogeneous for mixed or zero input.
Rational weight(const FockPoly& p);

/// The derivation on y*C[x_1, ...] with y -> y x_1, x_j -> x_{j+1}.
FockPoly fock_derivation(const FockPoly& p);

/// phi_B: y -> 1, x_j -> B_j x.
UnivarPoly phi_B(const FockPoly& p, const TruncatedSeries& b);

/// All monomials y*prod x_j^{e_j} with weight <= max_level + 1/2, ordered by
/// level and then lexicographically.
std::vector<FockPoly> fock_basis(int max_level);

/// L(-1)^n y.
FockPoly ladder_vector(int n);

/// Ladder coefficient from the recurrence f_m(n) = f_m(n-1) + (m+1) f_{m-1}(n-1)
/// with f_{-1}(n) = 1, f_0(0) = 1/2, f_m(0) = 0 (m >= 1).
/// IndexOutOfRange unless m >= -1 and n >= 0.
Rational f_rec(int m, int n);

/// (1/2) n(n-1)...(n-m+1) (2n-m+1) for m >= 0, 1 for m = -1. Any rational n.
Rational f_closed(int m, const Rational& n);

/// Table of f_rec values for -1 <= m <= max_m, 0 <= n <= max_n.
class FTable {
 public:
  FTable(int max_m, int max_n);

  int max_m() const noexcept { return max_m_; }
  int max_n() const noexcept { return max_n_; }
  const Rational& at(int m, int n) const;

  /// Header "m,0,1,...,max_n" then one row per m; exact "p/q" strings.
  std::string to_csv() const;
  /// {"max_m":..,"max_n":..,"rows":[{"m":-1,"values":["1",...]},...]}
  std::string to_json() const;

 private:
  int max_m_;
  int max_n_;
  std::vector<std::vector<Rational>> rows_;
};

/// Generalised umbral shift D_B(m): B_n(x) -> f_m(n) B_{n-m}(x), with
/// B_k = 0 for k < 0. D_B(-1) is the classical umbral shift.
UnivarPoly gen_umbral_shift_m(const TruncatedSeries& b, int m, const UnivarPoly& p);

/// (w^{m+1} d/dw + (m+1)/2 w^m) applied to a w-series; the result order is
/// s.order() + m (coefficients below w^m vanish for m > 0).
GenSeries<UnivarPoly> virasoro_w_operator(int m, const GenSeries<UnivarPoly>& s);

struct ShefferValues {
  Rational t;  ///< t_n(x) = f_{n-1}(x + n)
  Rational s;  ///< C(x+n+1, n) - (1/2) C(x+n, n-1)
};

ShefferValues sheffer_ts(int n, const Rational& x);

/// One cell of the bracket-derived relation
///   (l - m) f_{l+m}(n) = f_l(n - m) f_m(n) - f_m(n - l) f_l(n),
/// evaluated with the closed form (so any integer n is accepted).
bool f_heuristic_cell(int l, int m, int n);

}  // namespace umbra
