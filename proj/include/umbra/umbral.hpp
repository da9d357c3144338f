#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/gen_series.hpp"
#include "umbra/rational.hpp"
#include "umbra/series.hpp"
#include "umbra/univar_poly.hpp"

namespace umbra {

/// A series A(v) viewed as a linear functional on C[x] through
/// <A(v) | x^n> = A_n (the EGF coefficient).
class LinearFunctional {
 public:
  explicit LinearFunctional(TruncatedSeries a) : series_(std::move(a)) {}
  const TruncatedSeries& series() const noexcept { return series_; }

 private:
  TruncatedSeries series_;
};

/// <A | p> = sum_n p_n A_n. Throws OrderTooSmall when deg p exceeds A's order.
Rational pairing(const LinearFunctional& a, const UnivarPoly& p);
Rational pairing(const TruncatedSeries& a, const UnivarPoly& p);
/// Coefficientwise pairing of a w-series of polynomials; the result is a
/// series in w of the same order.
TruncatedSeries pairing(const TruncatedSeries& a, const GenSeries<UnivarPoly>& s);

/// e^{x B(w)} = sum_n B_n(x) w^n / n!, to w-order `order` (B delta).
GenSeries<UnivarPoly> exp_xB(const TruncatedSeries& b, int order);

/// Polynomial-coefficient expansion of A(x B(w)) to w-order `order`:
/// sum_k A_k x^k B(w)^k / k!. B must be a delta series.
GenSeries<UnivarPoly> substitute_xB(const TruncatedSeries& a, const TruncatedSeries& b, int order);

/// The attached umbral sequence B_0(x), ..., B_n(x).
std::vector<UnivarPoly> umbral_sequences(const TruncatedSeries& b, int n);
UnivarPoly umbral_sequence(const TruncatedSeries& b, int n);

/// Coordinates of p in a triangular basis (basis[k] of degree exactly k),
/// found by back-substitution from the top degree down.
std::vector<Rational> expand_in_basis(const std::vector<UnivarPoly>& basis, const UnivarPoly& p);

/// Umbral operator: x^n -> B_n(x).
UnivarPoly theta(const TruncatedSeries& b, const UnivarPoly& p);

/// Umbral shift: B_n(x) -> B_{n+1}(x). Needs B to order deg p + 1.
UnivarPoly shift_D(const TruncatedSeries& b, const UnivarPoly& p);

/// Generalised shift D^A_B: B_n(x) -> psi_A chi_B (D^{n+1} y_0).
UnivarPoly gen_shift_DAB(const TruncatedSeries& a, const TruncatedSeries& b, const UnivarPoly& p);

enum class AdjointKind { Mul, Diff, Subst, Shift, AdjNew };

/// Parses "mul", "diff", "subst", "shift" or "adjnew" (UnknownIdentityTag otherwise).
AdjointKind parse_adjoint_kind(std::string_view tag);
std::string_view to_string(AdjointKind kind) noexcept;

struct AdjointReport {
  AdjointKind kind;
  bool holds = true;
  int checks = 0;
  /// Description of the first mismatch, if any.
  std::optional<std::string> first_failure;
};

/// Checks one adjoint relation exactly on every basis polynomial x^k,
/// k <= max_degree:
///   Mul:   <q(d/dv) A | p> = <A | q(x) p>  for q = x, x^2 and the
///          polynomial part of B up to degree 3
///   Diff:  <B(v) A(v) | p> = <A | B(d/dx) p>
///   Subst: <A(B(v)) | p>   = <A | theta_B p>
///   Shift: <B*(v) A'(v) | p> = <A | D_B p>
///   AdjNew: the four x = 1 identities linking psi/chi images of e^{wD} y_i,
///          compared as w-series to order max_degree.
AdjointReport adjoint_report(AdjointKind kind, const TruncatedSeries& a, const TruncatedSeries& b, int max_degree);

/// Applies the differential operator sum_k F_k (d/dx)^k (ordinary coefficients
/// of F) to p; F must be known to order deg p.
UnivarPoly apply_series_of_derivative(const TruncatedSeries& f, const UnivarPoly& p);

}  // namespace umbra
