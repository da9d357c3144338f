#include "umbra/poly_ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "umbra/error.hpp"

namespace umbra {

namespace {

ExponentList merge(const ExponentList& a, const ExponentList& b) {
  ExponentList out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

/// Adjusts the exponent of `index` by delta (+1 or -1).
void bump(ExponentList& list, int index, int delta) {
  auto it = std::lower_bound(list.begin(), list.end(), index,
                             [](const std::pair<int, int>& e, int i) { return e.first < i; });
  if (it != list.end() && it->first == index) {
    it->second += delta;
    if (it->second == 0) list.erase(it);
  } else if (delta > 0) {
    list.insert(it, {index, delta});
  } else {
    throw MathError(ErrorCode::InvalidArgument, "exponent would become negative");
  }
}

}  // namespace

int Monomial::y_degree() const noexcept {
  int d = 0;
  for (const auto& [i, e] : y) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  return Monomial{merge(a.y, b.y), merge(a.x, b.x), a.plain_x + b.plain_x, a.plain_w + b.plain_w};
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::y(int i, int floor) {
  if (i < floor)
    throw MathError(ErrorCode::IndexOutOfRange,
                    "y_" + std::to_string(i) + " is below the floor " + std::to_string(floor));
  return term(Monomial{{{i, 1}}, {}, 0, 0}, Rational(1));
}

MultiPoly MultiPoly::x(int j) {
  if (j < 1) throw MathError(ErrorCode::IndexOutOfRange, "x_j needs j >= 1");
  return term(Monomial{{}, {{j, 1}}, 0, 0}, Rational(1));
}

MultiPoly MultiPoly::plain_x() { return term(Monomial{{}, {}, 1, 0}, Rational(1)); }
MultiPoly MultiPoly::plain_w() { return term(Monomial{{}, {}, 0, 1}, Rational(1)); }

MultiPoly MultiPoly::term(Monomial m, const Rational& c) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::has_plain_variables() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.plain_x != 0 || t.first.plain_w != 0; });
}

bool MultiPoly::has_y() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.first.y.empty(); });
}

bool MultiPoly::has_indexed_x() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.first.x.empty(); });
}

int MultiPoly::max_x_index() const {
  int m = 0;
  for (const auto& [mono, c] : terms_)
    if (!mono.x.empty()) m = std::max(m, mono.x.back().first);
  return m;
}

int MultiPoly::max_y_index() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [mono, c] : terms_)
    if (!mono.y.empty()) m = std::max(m, mono.y.back().first);
  return m;
}

int MultiPoly::min_y_index() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [mono, c] : terms_)
    if (!mono.y.empty()) m = std::min(m, mono.y.front().first);
  return m;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

UnivarPoly MultiPoly::to_univar() const {
  std::vector<Rational> v;
  for (const auto& [m, c] : terms_) {
    if (!m.y.empty() || !m.x.empty() || m.plain_w != 0)
      throw MathError(ErrorCode::UnsupportedVariable, "expected a polynomial in plain x only, got " + str());
    if (v.size() <= static_cast<std::size_t>(m.plain_x)) v.resize(static_cast<std::size_t>(m.plain_x) + 1);
    v[static_cast<std::size_t>(m.plain_x)] += c;
  }
  return UnivarPoly(std::move(v));
}

MultiPoly MultiPoly::from_univar(const UnivarPoly& p) {
  MultiPoly r;
  for (int k = 0; k <= p.degree(); ++k) r.add_term(Monomial{{}, {}, k, 0}, p[k]);
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (const auto& [i, e] : m.y) os << "*y_" << i << (e > 1 ? "^" + std::to_string(e) : "");
    for (const auto& [j, e] : m.x) os << "*x_" << j << (e > 1 ? "^" + std::to_string(e) : "");
    if (m.plain_x) os << "*x" << (m.plain_x > 1 ? "^" + std::to_string(m.plain_x) : "");
    if (m.plain_w) os << "*w" << (m.plain_w > 1 ? "^" + std::to_string(m.plain_w) : "");
  }
  return os.str();
}

MultiPoly derivation_D(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.plain_x != 0 || m.plain_w != 0)
      throw MathError(ErrorCode::UnsupportedVariable, "D acts on y_i and x_j only");
    // Product rule, one generator at a time.
    for (const auto& [i, e] : m.y) {
      Monomial next = m;
      bump(next.y, i, -1);
      bump(next.y, i + 1, +1);
      bump(next.x, 1, +1);
      out += MultiPoly::term(std::move(next), c * Rational(e));
    }
    for (const auto& [j, e] : m.x) {
      Monomial next = m;
      bump(next.x, j, -1);
      bump(next.x, j + 1, +1);
      out += MultiPoly::term(std::move(next), c * Rational(e));
    }
  }
  return out;
}

GenSeries<MultiPoly> exp_wD(const MultiPoly& p, int order) {
  if (p.has_plain_variables()) throw MathError(ErrorCode::UnsupportedVariable, "D acts on y_i and x_j only");
  std::vector<MultiPoly> coeffs;
  MultiPoly current = p;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) current = derivation_D(current);
    coeffs.push_back(current * (Rational(1) / factorial(k)));
  }
  return GenSeries<MultiPoly>(std::move(coeffs));
}

MultiPoly chi_B(const MultiPoly& p, const TruncatedSeries& b) {
  if (!b.is_delta()) throw MathError(ErrorCode::NotDeltaSeries, "chi_B needs a delta series");
  if (p.max_x_index() > b.order())
    throw MathError(ErrorCode::OrderTooSmall, "chi_B needs B to order " + std::to_string(p.max_x_index()));
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    Rational coeff = c;
    Monomial image = m;
    image.x.clear();
    for (const auto& [j, e] : m.x) {
      coeff *= pow(b.egf(j), static_cast<unsigned>(e));
      image.plain_x += e;
    }
    out += MultiPoly::term(std::move(image), coeff);
  }
  return out;
}

MultiPoly psi_A(const MultiPoly& p, const TruncatedSeries& a, std::span<const Rational> below) {
  if (p.has_indexed_x()) throw MathError(ErrorCode::UnsupportedVariable, "psi_A is defined on C[y_i, x]");
  if (p.has_y() && p.max_y_index() > a.order())
    throw MathError(ErrorCode::OrderTooSmall, "psi_A needs A to order " + std::to_string(p.max_y_index()));
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    Rational coeff = c;
    Monomial image = m;
    image.y.clear();
    for (const auto& [i, e] : m.y) {
      Rational value(0);
      if (i >= 0) {
        value = a.egf(i);
      } else if (static_cast<std::size_t>(-i - 1) < below.size()) {
        value = below[static_cast<std::size_t>(-i - 1)];
      }
      coeff *= pow(value, static_cast<unsigned>(e));
    }
    out += MultiPoly::term(std::move(image), coeff);
  }
  return out;
}

UnivarPoly phi_B(const MultiPoly& p, const TruncatedSeries& b) {
  if (p.has_y()) throw MathError(ErrorCode::UnsupportedVariable, "phi_B does not accept general y_i");
  if (p.has_plain_variables()) throw MathError(ErrorCode::UnsupportedVariable, "phi_B acts on C[x_1, x_2, ...]");
  return chi_B(p, b).to_univar();
}

GenSeries<MultiPoly> faa_rhs(int order) {
  std::vector<MultiPoly> g(static_cast<std::size_t>(order) + 1);
  for (int m = 1; m <= order; ++m) g[static_cast<std::size_t>(m)] = MultiPoly::x(m) * (Rational(1) / factorial(m));
  const GenSeries<MultiPoly> inner(std::move(g));

  std::vector<MultiPoly> one(static_cast<std::size_t>(order) + 1);
  one[0] = MultiPoly(Rational(1));
  GenSeries<MultiPoly> power(std::move(one));
  GenSeries<MultiPoly> result(order);
  for (int n = 0; n <= order; ++n) {
    const MultiPoly scale = MultiPoly::y(n) * (Rational(1) / factorial(n));
    result = result + power.map([&](const MultiPoly& c) { return scale * c; });
    power = power * inner;
  }
  return result;
}

GenSeries<UnivarPoly> psi_chi(const GenSeries<MultiPoly>& s, const TruncatedSeries& a, const TruncatedSeries& b,
                              std::span<const Rational> below) {
  return s.map([&](const MultiPoly& c) { return psi_A(chi_B(c, b), a, below).to_univar(); });
}

}  // namespace umbra
