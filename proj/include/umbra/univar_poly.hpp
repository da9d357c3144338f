#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/rational.hpp"

namespace umbra {

/// Dense polynomial in x with rational coefficients. Trailing zeros are
/// stripped, so the zero polynomial has no coefficients and degree -1.
class UnivarPoly {
 public:
  UnivarPoly() = default;
  explicit UnivarPoly(std::vector<Rational> coeffs);
  UnivarPoly(std::initializer_list<Rational> coeffs)
      : UnivarPoly(std::vector<Rational>(coeffs)) {}

  static UnivarPoly constant(const Rational& c);
  static UnivarPoly monomial(int degree, const Rational& c = Rational(1));
  /// Comma-separated rationals, lowest degree first, e.g. "0,1,1" = x + x^2.
  static UnivarPoly parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^k; zero beyond the degree.
  Rational operator[](int k) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  UnivarPoly derivative() const;

  UnivarPoly operator-() const;
  UnivarPoly& operator+=(const UnivarPoly& o);
  UnivarPoly& operator-=(const UnivarPoly& o);
  UnivarPoly& operator*=(const Rational& s);
  friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
  friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
  friend UnivarPoly operator*(UnivarPoly a, const Rational& s) { return a *= s; }
  friend UnivarPoly operator*(const Rational& s, UnivarPoly a) { return a *= s; }
  friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);

  friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

  /// "p0,p1,...,pd"; "0" for the zero polynomial.
  std::string to_csv() const;
  /// Human-readable, highest degree first: "x^3 + 3*x^2 + x".
  std::string pretty() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

}  // namespace umbra
