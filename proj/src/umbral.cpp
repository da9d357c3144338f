#include "umbra/umbral.hpp"

#include <sstream>

#include "umbra/error.hpp"
#include "umbra/poly_ring.hpp"

namespace umbra {

namespace {

void require_delta(const TruncatedSeries& b) {
  if (!b.is_delta()) throw MathError(ErrorCode::NotDeltaSeries, "B must have B_0 = 0 and B_1 != 0");
}

void require_order(const TruncatedSeries& s, int needed, const char* what) {
  if (s.order() < needed)
    throw MathError(ErrorCode::OrderTooSmall, std::string(what) + " must be known to order " +
                                                  std::to_string(needed) + ", got " + std::to_string(s.order()));
}

/// Ordinary-coefficient powers B^0 .. B^n, each truncated to order n.
std::vector<TruncatedSeries> powers(const TruncatedSeries& b, int n) {
  std::vector<TruncatedSeries> out;
  const TruncatedSeries base = b.truncated(n);
  out.push_back(TruncatedSeries::constant(Rational(1), n));
  for (int j = 1; j <= n; ++j) out.push_back(out.back() * base);
  return out;
}

TruncatedSeries at_x_equals_one(const GenSeries<UnivarPoly>& s) {
  std::vector<Rational> c;
  for (int k = 0; k <= s.order(); ++k) c.push_back(s[k].evaluate(Rational(1)));
  return TruncatedSeries(s.order(), std::move(c));
}

std::string describe(const char* label, int degree, const Rational& lhs, const Rational& rhs) {
  std::ostringstream os;
  os << label << " at x^" << degree << ": " << lhs << " != " << rhs;
  return os.str();
}

void compare_series(AdjointReport& report, const char* label, const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                    int order) {
  require_order(lhs, order, label);
  require_order(rhs, order, label);
  for (int k = 0; k <= order; ++k) {
    ++report.checks;
    if (lhs[k] != rhs[k] && report.holds) {
      report.holds = false;
      std::ostringstream os;
      os << label << " at w^" << k << ": " << lhs[k] << " != " << rhs[k];
      report.first_failure = os.str();
    }
  }
}

}  // namespace

Rational pairing(const TruncatedSeries& a, const UnivarPoly& p) {
  require_order(a, p.degree(), "functional");
  Rational acc(0);
  for (int n = 0; n <= p.degree(); ++n)
    if (!p[n].is_zero()) acc += p[n] * a.egf(n);
  return acc;
}

Rational pairing(const LinearFunctional& a, const UnivarPoly& p) { return pairing(a.series(), p); }

TruncatedSeries pairing(const TruncatedSeries& a, const GenSeries<UnivarPoly>& s) {
  std::vector<Rational> c;
  for (int k = 0; k <= s.order(); ++k) c.push_back(pairing(a, s[k]));
  return TruncatedSeries(s.order(), std::move(c));
}

std::vector<UnivarPoly> umbral_sequences(const TruncatedSeries& b, int n) {
  require_delta(b);
  require_order(b, n, "B");
  const auto pw = powers(b, n);
  std::vector<UnivarPoly> seq;
  for (int k = 0; k <= n; ++k) {
    // B_k(x) = sum_j x^j k!/j! [w^k] B(w)^j
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) c[static_cast<std::size_t>(j)] = factorial(k) / factorial(j) * pw[j][k];
    seq.emplace_back(std::move(c));
  }
  return seq;
}

UnivarPoly umbral_sequence(const TruncatedSeries& b, int n) {
  if (n < 0) throw MathError(ErrorCode::IndexOutOfRange, "umbral sequence index must be >= 0");
  return umbral_sequences(b, n).back();
}

GenSeries<UnivarPoly> exp_xB(const TruncatedSeries& b, int order) {
  auto seq = umbral_sequences(b, order);
  for (int k = 0; k <= order; ++k) seq[static_cast<std::size_t>(k)] *= Rational(1) / factorial(k);
  return GenSeries<UnivarPoly>(std::move(seq));
}

GenSeries<UnivarPoly> substitute_xB(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
  require_delta(b);
  require_order(b, order, "B");
  require_order(a, order, "A");
  const auto pw = powers(b, order);
  GenSeries<UnivarPoly> out(order);
  for (int k = 0; k <= order; ++k) {
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) c[static_cast<std::size_t>(j)] = a[j] * pw[j][k];
    out[k] = UnivarPoly(std::move(c));
  }
  return out;
}

std::vector<Rational> expand_in_basis(const std::vector<UnivarPoly>& basis, const UnivarPoly& p) {
  if (p.degree() >= static_cast<int>(basis.size()))
    throw MathError(ErrorCode::OrderTooSmall, "basis too short for polynomial of degree " + std::to_string(p.degree()));
  std::vector<Rational> coords(static_cast<std::size_t>(std::max(p.degree(), -1) + 1));
  UnivarPoly rest = p;
  for (int k = p.degree(); k >= 0; --k) {
    const UnivarPoly& e = basis[static_cast<std::size_t>(k)];
    if (e.degree() != k) throw MathError(ErrorCode::InvalidArgument, "basis element has the wrong degree");
    const Rational c = rest[k] / e.leading();
    coords[static_cast<std::size_t>(k)] = c;
    if (!c.is_zero()) rest -= e * c;
  }
  return coords;
}

UnivarPoly theta(const TruncatedSeries& b, const UnivarPoly& p) {
  if (p.is_zero()) return {};
  const auto seq = umbral_sequences(b, p.degree());
  UnivarPoly out;
  for (int n = 0; n <= p.degree(); ++n)
    if (!p[n].is_zero()) out += seq[static_cast<std::size_t>(n)] * p[n];
  return out;
}

UnivarPoly shift_D(const TruncatedSeries& b, const UnivarPoly& p) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  const auto seq = umbral_sequences(b, d + 1);
  const auto coords = expand_in_basis(seq, p);
  UnivarPoly out;
  for (int n = 0; n <= d; ++n)
    if (!coords[static_cast<std::size_t>(n)].is_zero()) out += seq[static_cast<std::size_t>(n + 1)] * coords[static_cast<std::size_t>(n)];
  return out;
}

UnivarPoly gen_shift_DAB(const TruncatedSeries& a, const TruncatedSeries& b, const UnivarPoly& p) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  require_order(a, d + 1, "A");
  const auto seq = umbral_sequences(b, d + 1);
  const auto coords = expand_in_basis(seq, p);
  UnivarPoly out;
  MultiPoly power = MultiPoly::y(0);
  for (int n = 0; n <= d; ++n) {
    power = derivation_D(power);  // D^{n+1} y_0
    const Rational& c = coords[static_cast<std::size_t>(n)];
    if (!c.is_zero()) out += psi_A(chi_B(power, b), a).to_univar() * c;
  }
  return out;
}

UnivarPoly apply_series_of_derivative(const TruncatedSeries& f, const UnivarPoly& p) {
  UnivarPoly out;
  UnivarPoly deriv = p;
  for (int k = 0; k <= p.degree(); ++k) {
    if (!f[k].is_zero()) out += deriv * f[k];
    deriv = deriv.derivative();
  }
  return out;
}

AdjointKind parse_adjoint_kind(std::string_view tag) {
  if (tag == "mul") return AdjointKind::Mul;
  if (tag == "diff") return AdjointKind::Diff;
  if (tag == "subst") return AdjointKind::Subst;
  if (tag == "shift") return AdjointKind::Shift;
  if (tag == "adjnew") return AdjointKind::AdjNew;
  throw MathError(ErrorCode::UnknownIdentityTag, "unknown adjoint identity '" + std::string(tag) + "'");
}

std::string_view to_string(AdjointKind kind) noexcept {
  switch (kind) {
    case AdjointKind::Mul: return "mul";
    case AdjointKind::Diff: return "diff";
    case AdjointKind::Subst: return "subst";
    case AdjointKind::Shift: return "shift";
    case AdjointKind::AdjNew: return "adjnew";
  }
  return "?";
}

namespace {

void check_pair(AdjointReport& report, const char* label, int degree, const Rational& lhs, const Rational& rhs) {
  ++report.checks;
  if (lhs != rhs && report.holds) {
    report.holds = false;
    report.first_failure = describe(label, degree, lhs, rhs);
  }
}

/// q(d/dv) A for a polynomial q.
TruncatedSeries apply_poly_of_derivative(const UnivarPoly& q, const TruncatedSeries& a) {
  TruncatedSeries out = TruncatedSeries(a.order() - q.degree());
  for (int j = 0; j <= q.degree(); ++j) out = out + q[j] * shift_egf(a, j);
  return out;
}

void report_adjnew(AdjointReport& report, const TruncatedSeries& a, const TruncatedSeries& b, int order) {
  const int w = order + 1;
  const TruncatedSeries da = a.derivative();
  const auto y0 = exp_wD(MultiPoly::y(0), w);
  const auto y1 = exp_wD(MultiPoly::y(1), w);
  const auto ym1 = exp_wD(MultiPoly::y(-1), w);
  const TruncatedSeries t = TruncatedSeries::identity(b.order());

  // (1) A'(B(w))
  const TruncatedSeries one_direct = compose(da, b);
  compare_series(report, "adjnew(1) y_1 route", one_direct, at_x_equals_one(psi_chi(y1, a, b)), order);
  compare_series(report, "adjnew(1) A' route", one_direct, at_x_equals_one(psi_chi(y0, da, b)), order);

  // (2) A(B(w)) B(w)
  std::vector<Rational> ta{Rational(0)};
  for (int n = 0; n <= a.order(); ++n) ta.push_back(a[n]);
  const TruncatedSeries t_times_a(a.order() + 1, std::move(ta));
  const TruncatedSeries two_direct = compose(a, b) * b;
  const auto ym1_image = psi_chi(ym1, a, b).map([](const UnivarPoly& p) { return p.derivative(); });
  compare_series(report, "adjnew(2) y_-1 route", two_direct, at_x_equals_one(ym1_image), order);
  compare_series(report, "adjnew(2) tA route", two_direct, at_x_equals_one(psi_chi(y0, t_times_a, b)), order);

  // (3) A(B(w))
  const TruncatedSeries three_direct = compose(a, b);
  const TruncatedSeries three_ring = at_x_equals_one(psi_chi(y0, a, b));
  compare_series(report, "adjnew(3) chi_B route", three_direct, three_ring, order);
  compare_series(report, "adjnew(3) chi_t route", three_direct,
                 at_x_equals_one(psi_chi(y0, compose(a, b), t)), order);

  // (4) A'(B(w)) B'(w)
  const TruncatedSeries four_direct = compose(da, b) * b.derivative();
  compare_series(report, "adjnew(4) d/dw route", four_direct, three_ring.derivative(), order);
  compare_series(report, "adjnew(4) B* route", four_direct, at_x_equals_one(psi_chi(y0, b_star(b) * da, b)), order);
}

}  // namespace

AdjointReport adjoint_report(AdjointKind kind, const TruncatedSeries& a, const TruncatedSeries& b, int max_degree) {
  AdjointReport report;
  report.kind = kind;
  if (kind == AdjointKind::AdjNew) {
    require_delta(b);
    report_adjnew(report, a, b, max_degree);
    return report;
  }
  if (kind != AdjointKind::Mul && kind != AdjointKind::Diff) require_delta(b);

  // Right-hand operators applied to the functional, computed once.
  std::vector<std::pair<UnivarPoly, TruncatedSeries>> multipliers;
  TruncatedSeries left;
  switch (kind) {
    case AdjointKind::Mul: {
      std::vector<Rational> part;
      for (int j = 0; j <= std::min(3, b.order()); ++j) part.push_back(b[j]);
      for (const UnivarPoly& q : {UnivarPoly::monomial(1), UnivarPoly::monomial(2), UnivarPoly(part)})
        multipliers.emplace_back(q, apply_poly_of_derivative(q, a));
      break;
    }
    case AdjointKind::Diff: left = b * a; break;
    case AdjointKind::Subst: left = compose(a, b); break;
    case AdjointKind::Shift: left = b_star(b) * a.derivative(); break;
    case AdjointKind::AdjNew: break;
  }

  for (int n = 0; n <= max_degree; ++n) {
    const UnivarPoly basis = UnivarPoly::monomial(n);
    switch (kind) {
      case AdjointKind::Mul:
        for (const auto& [q, qa] : multipliers) check_pair(report, "mul", n, pairing(qa, basis), pairing(a, q * basis));
        break;
      case AdjointKind::Diff:
        check_pair(report, "diff", n, pairing(left, basis), pairing(a, apply_series_of_derivative(b, basis)));
        break;
      case AdjointKind::Subst:
        check_pair(report, "subst", n, pairing(left, basis), pairing(a, theta(b, basis)));
        break;
      case AdjointKind::Shift:
        check_pair(report, "shift", n, pairing(left, basis), pairing(a, shift_D(b, basis)));
        break;
      case AdjointKind::AdjNew: break;
    }
  }
  return report;
}

}  // namespace umbra
