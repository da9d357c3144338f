#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "umbra/gen_series.hpp"
#include "umbra/rational.hpp"
#include "umbra/series.hpp"
#include "umbra/univar_poly.hpp"

namespace umbra {

/// Lowest y-index accepted unless a caller asks for a different floor.
inline constexpr int kDefaultYFloor = -4;

/// Sparse exponent list: (variable index, exponent) pairs sorted by index,
/// exponents >= 1.
using ExponentList = std::vector<std::pair<int, int>>;

/// Monomial in y_i (i in Z), x_j (j >= 1) and the two plain variables x, w.
struct Monomial {
  ExponentList y;
  ExponentList x;
  int plain_x = 0;
  int plain_w = 0;

  bool is_one() const noexcept { return y.empty() && x.empty() && plain_x == 0 && plain_w == 0; }
  int y_degree() const noexcept;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Element of C[..., y_{-1}, y_0, y_1, ..., x_1, x_2, ...] optionally extended
/// by the plain variables x and w. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// y_i; throws IndexOutOfRange when i is below `floor`.
  static MultiPoly y(int i, int floor = kDefaultYFloor);
  /// x_j, j >= 1.
  static MultiPoly x(int j);
  static MultiPoly plain_x();
  static MultiPoly plain_w();
  static MultiPoly term(Monomial m, const Rational& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  bool has_plain_variables() const;
  bool has_y() const;
  bool has_indexed_x() const;
  int max_x_index() const;
  int max_y_index() const;
  int min_y_index() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Polynomial in the plain variable x only -> UnivarPoly (UnsupportedVariable otherwise).
  UnivarPoly to_univar() const;
  static MultiPoly from_univar(const UnivarPoly& p);

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// The derivation D with D y_i = y_{i+1} x_1 and D x_j = x_{j+1}.
/// Plain x / w are rejected with UnsupportedVariable.
MultiPoly derivation_D(const MultiPoly& p);

/// e^{wD} p to w-order N: coefficient k is D^k p / k!.
GenSeries<MultiPoly> exp_wD(const MultiPoly& p, int order);

/// Homomorphism fixing every y_i and sending x_j to B_j x (B_j the EGF
/// coefficient). B must be a delta series known to at least the largest x-index.
MultiPoly chi_B(const MultiPoly& p, const TruncatedSeries& b);

/// Homomorphism sending y_i to A_i and fixing x. Negative indices read the
/// extension `below` (below[j] = A_{-(j+1)}), zero where not supplied.
/// Indexed x_j are rejected with UnsupportedVariable.
MultiPoly psi_A(const MultiPoly& p, const TruncatedSeries& a, std::span<const Rational> below = {});

/// phi_B on C[x_1, x_2, ...]: x_j -> B_j x. (The Fock-space overload, where
/// the single y is sent to 1, lives with the Virasoro module.) Any y_i is
/// rejected with UnsupportedVariable.
UnivarPoly phi_B(const MultiPoly& p, const TruncatedSeries& b);

/// sum_n y_n (sum_{m>=1} w^m x_m / m!)^n / n! to w-order N.
GenSeries<MultiPoly> faa_rhs(int order);

/// Coefficientwise psi_A o chi_B of a w-series, converted to polynomials in x.
GenSeries<UnivarPoly> psi_chi(const GenSeries<MultiPoly>& s, const TruncatedSeries& a, const TruncatedSeries& b,
                              std::span<const Rational> below = {});

}  // namespace umbra
