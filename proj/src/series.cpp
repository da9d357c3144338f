#include "umbra/series.hpp"

#include <algorithm>

#include "umbra/error.hpp"

namespace umbra {

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

std::string order_message(int want, int have) {
  return "coefficient " + std::to_string(want) + " requested from a series known to order " +
         std::to_string(have);
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : coeffs_(sz(std::max(order, 0)) + 1) {
  if (order < 0) throw MathError(ErrorCode::InvalidArgument, "negative truncation order");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0) throw MathError(ErrorCode::InvalidArgument, "negative truncation order");
  coeffs_.resize(sz(order) + 1);
}

TruncatedSeries TruncatedSeries::from_egf(int order, std::span<const Rational> egf) {
  std::vector<Rational> c;
  c.reserve(egf.size());
  for (std::size_t n = 0; n < egf.size() && n <= sz(order); ++n)
    c.push_back(egf[n] / factorial(static_cast<int>(n)));
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  return TruncatedSeries(order, {c});
}

TruncatedSeries TruncatedSeries::identity(int order) { return monomial(1, Rational(1), order); }

TruncatedSeries TruncatedSeries::monomial(int degree, const Rational& c, int order) {
  TruncatedSeries s(order);
  if (degree >= 0 && degree <= order) s.coeffs_[sz(degree)] = c;
  return s;
}

TruncatedSeries TruncatedSeries::exp_t(int order) {
  TruncatedSeries s(order);
  for (int n = 0; n <= order; ++n) s.coeffs_[sz(n)] = Rational(1) / factorial(n);
  return s;
}

const Rational& TruncatedSeries::operator[](int n) const {
  if (n < 0 || n > order()) throw MathError(ErrorCode::OrderTooSmall, order_message(n, order()));
  return coeffs_[sz(n)];
}

Rational TruncatedSeries::egf(int n) const { return (*this)[n] * factorial(n); }

std::vector<Rational> TruncatedSeries::egf_coeffs() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (int n = 0; n <= order(); ++n) out.push_back(egf(n));
  return out;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  const int n = std::min(order, this->order());
  return TruncatedSeries(n, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

TruncatedSeries TruncatedSeries::derivative() const {
  const int n = std::max(order() - 1, 0);
  TruncatedSeries d(n);
  for (int k = 1; k <= order(); ++k) d.coeffs_[sz(k - 1)] = coeffs_[sz(k)] * Rational(k);
  return d;
}

Rational TruncatedSeries::evaluate_polynomial(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[sz(k)] = a.coeffs_[sz(k)] + b.coeffs_[sz(k)];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[sz(k)] = a.coeffs_[sz(k)] - b.coeffs_[sz(k)];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  const int n = r.order();
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[sz(i)].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) r.coeffs_[sz(i + j)] += a.coeffs_[sz(i)] * b.coeffs_[sz(j)];
  }
  return r;
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

std::string TruncatedSeries::to_csv() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ',';
    out += coeffs_[k].str();
  }
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries mul_inverse(const TruncatedSeries& c) {
  if (c[0].is_zero()) throw MathError(ErrorCode::ZeroConstantTerm, "multiplicative inverse needs c_0 != 0");
  const int n = c.order();
  std::vector<Rational> r(sz(n) + 1);
  const Rational inv0 = Rational(1) / c[0];
  r[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += c[j] * r[sz(k - j)];
    r[sz(k)] = -acc * inv0;
  }
  return TruncatedSeries(n, std::move(r));
}

TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!b[0].is_zero()) throw MathError(ErrorCode::InnerConstantTerm, "inner series must have zero constant term");
  const int n = std::min(a.order(), b.order());
  const TruncatedSeries inner = b.truncated(n);
  // Horner: a_n, then (.)*b + a_k down to k = 0.
  TruncatedSeries acc = TruncatedSeries::constant(a[n], n);
  for (int k = n - 1; k >= 0; --k) acc = acc * inner + TruncatedSeries::constant(a[k], n);
  return acc;
}

TruncatedSeries comp_inverse(const TruncatedSeries& b) {
  if (!b.is_delta()) throw MathError(ErrorCode::NotDeltaSeries, "compositional inverse needs b_0 = 0, b_1 != 0");
  const int n = b.order();
  std::vector<Rational> inv(sz(n) + 1);
  inv[1] = Rational(1) / b[1];
  // [t^k] B(Bbar) = b_1 * Bbar_k + (terms in Bbar_1..Bbar_{k-1}); solve for Bbar_k.
  for (int k = 2; k <= n; ++k) {
    const TruncatedSeries partial(k, std::vector<Rational>(inv.begin(), inv.begin() + k + 1));
    const Rational residual = compose(b.truncated(k), partial)[k];
    inv[sz(k)] = -residual / b[1];
  }
  return TruncatedSeries(n, std::move(inv));
}

TruncatedSeries shift_egf(const TruncatedSeries& a, int n, std::span<const Rational> below) {
  const int order = n >= 0 ? std::max(a.order() - n, 0) : a.order() - n;
  std::vector<Rational> egf(sz(order) + 1);
  for (int k = 0; k <= order; ++k) {
    const int src = k + n;
    if (src > a.order()) continue;  // only reachable when order was clamped at zero
    if (src >= 0) {
      egf[sz(k)] = a.egf(src);
    } else if (sz(-src - 1) < below.size()) {
      egf[sz(k)] = below[sz(-src - 1)];
    }
  }
  return TruncatedSeries::from_egf(order, egf);
}

TruncatedSeries b_star(const TruncatedSeries& b) {
  if (!b.is_delta()) throw MathError(ErrorCode::NotDeltaSeries, "B* needs a delta series");
  return compose(b.derivative(), comp_inverse(b));
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
  if (!a[0].is_zero()) throw MathError(ErrorCode::NonzeroConstantTerm, "exp needs a zero constant term");
  // E' = a' E  =>  n e_n = sum_{k=1}^n k a_k e_{n-k}.
  const int n = a.order();
  std::vector<Rational> e(sz(n) + 1);
  e[0] = Rational(1);
  for (int m = 1; m <= n; ++m) {
    Rational acc(0);
    for (int k = 1; k <= m; ++k) acc += Rational(k) * a[k] * e[sz(m - k)];
    e[sz(m)] = acc / Rational(m);
  }
  return TruncatedSeries(n, std::move(e));
}

TruncatedSeries log_series(const TruncatedSeries& c) {
  if (c[0] != Rational(1)) throw MathError(ErrorCode::ConstantTermNotOne, "log needs constant term 1");
  // c L' = c'  =>  n l_n = n c_n - sum_{k=1}^{n-1} k l_k c_{n-k}.
  const int n = c.order();
  std::vector<Rational> l(sz(n) + 1);
  for (int m = 1; m <= n; ++m) {
    Rational acc = Rational(m) * c[m];
    for (int k = 1; k < m; ++k) acc -= Rational(k) * l[sz(k)] * c[m - k];
    l[sz(m)] = acc / Rational(m);
  }
  return TruncatedSeries(n, std::move(l));
}

GenSeries<TruncatedSeries> taylor_expand(const TruncatedSeries& h) {
  std::vector<TruncatedSeries> coeffs;
  for (int k = 0; k <= h.order(); ++k)
    coeffs.push_back((Rational(1) / factorial(k)) * shift_egf(h, k));
  return GenSeries<TruncatedSeries>(std::move(coeffs));
}

GenSeries<TruncatedSeries> composite_derivative_expansion(const TruncatedSeries& f, const TruncatedSeries& g,
                                                          int w_order) {
  if (!g[0].is_zero()) throw MathError(ErrorCode::InnerConstantTerm, "inner series must have zero constant term");
  // G(x, w) = sum_{m>=1} g^{(m)}(x) w^m / m!
  std::vector<TruncatedSeries> gc;
  gc.push_back(TruncatedSeries(g.order()));
  for (int m = 1; m <= w_order; ++m) gc.push_back((Rational(1) / factorial(m)) * shift_egf(g, m));
  const GenSeries<TruncatedSeries> big_g(std::move(gc));

  std::vector<TruncatedSeries> unit;
  unit.push_back(TruncatedSeries::constant(Rational(1), g.order()));
  for (int k = 1; k <= w_order; ++k) unit.push_back(TruncatedSeries(g.order()));
  GenSeries<TruncatedSeries> power(std::move(unit));

  GenSeries<TruncatedSeries> result;
  for (int n = 0; n <= w_order; ++n) {
    const TruncatedSeries outer = (Rational(1) / factorial(n)) * compose(shift_egf(f, n), g);
    GenSeries<TruncatedSeries> term = power.map([&](const TruncatedSeries& c) { return outer * c; });
    result = n == 0 ? term : result + term;
    power = power * big_g;
  }
  return result;
}

}  // namespace umbra
