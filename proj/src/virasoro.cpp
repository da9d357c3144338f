#include "umbra/virasoro.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "umbra/error.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

namespace {

int exponent_of(const ExponentList& m, int j) {
  for (const auto& [idx, e] : m)
    if (idx == j) return e;
  return 0;
}

ExponentList with_exponent_delta(ExponentList m, int j, int delta) {
  auto it = std::find_if(m.begin(), m.end(), [j](const auto& e) { return e.first >= j; });
  if (it != m.end() && it->first == j) {
    it->second += delta;
    if (it->second == 0) m.erase(it);
  } else {
    m.insert(it, {j, delta});
  }
  return m;
}

}  // namespace

FockPoly FockPoly::vacuum() { return monomial({}); }

FockPoly FockPoly::monomial(ExponentList exponents, const Rational& c) {
  std::sort(exponents.begin(), exponents.end());
  for (const auto& [j, e] : exponents)
    if (j < 1 || e < 1) throw MathError(ErrorCode::InvalidArgument, "Fock monomials need x_j with j >= 1, e >= 1");
  FockPoly p;
  p.add_term(exponents, c);
  return p;
}

void FockPoly::add_term(const ExponentList& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockPoly FockPoly::times_x(int j) const {
  FockPoly out;
  for (const auto& [m, c] : terms_) out.add_term(with_exponent_delta(m, j, +1), c);
  return out;
}

FockPoly FockPoly::partial_x(int j) const {
  FockPoly out;
  for (const auto& [m, c] : terms_) {
    const int e = exponent_of(m, j);
    if (e == 0) continue;
    out.add_term(with_exponent_delta(m, j, -1), c * Rational(e));
  }
  return out;
}

FockPoly FockPoly::operator-() const {
  FockPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

FockPoly& FockPoly::operator+=(const FockPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FockPoly& FockPoly::operator-=(const FockPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FockPoly& FockPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiPoly FockPoly::to_multipoly(int y_index) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out += MultiPoly::term(Monomial{{{y_index, 1}}, m, 0, 0}, c);
  return out;
}

FockPoly FockPoly::collapse_y(const MultiPoly& p) {
  FockPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.y_degree() != 1 || m.plain_x != 0 || m.plain_w != 0)
      throw MathError(ErrorCode::UnsupportedVariable, "expected y-degree one in y*C[x_1, x_2, ...]");
    out.add_term(m.x, c);
  }
  return out;
}

std::string FockPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*y";
    for (const auto& [j, e] : m) os << "*x_" << j << (e > 1 ? "^" + std::to_string(e) : "");
  }
  return os.str();
}

FockPoly h_op(int n, const FockPoly& p) {
  if (n < 0) return p.times_x(-n) * (Rational(1) / factorial(-n - 1));
  if (n > 0) return p.partial_x(n) * factorial(n);
  return p;
}

std::vector<int> active_modes(int m, const ExponentList& monomial) {
  std::set<int> ks{0};
  for (const auto& [j, e] : monomial) {
    ks.insert(j);
    ks.insert(m - j);
  }
  for (int k = m; k < 0; ++k) ks.insert(k);
  return {ks.begin(), ks.end()};
}

FockPoly L_op(int m, const FockPoly& p) {
  FockPoly out;
  const Rational half(1, 2);
  for (const auto& [mono, c] : p.terms()) {
    const FockPoly single = FockPoly::monomial(mono, c);
    if (m == 0) {
      // (1/2) h(0)^2 + sum_{k>0} h(-k) h(k); only k with x_k present survive.
      out += single * half;
      for (const auto& [j, e] : mono) out += h_op(-j, h_op(j, single));
      continue;
    }
    for (int k : active_modes(m, mono)) out += h_op(m - k, h_op(k, single)) * half;
  }
  return out;
}

Rational weight(const FockPoly& p) {
  if (p.is_zero()) throw MathError(ErrorCode::NotHomogeneous, "the zero vector has no weight");
  std::optional<Rational> w;
  for (const auto& [mono, c] : p.terms()) {
    long level = 0;
    for (const auto& [j, e] : mono) level += static_cast<long>(j) * e;
    const Rational here = Rational(1, 2) + Rational(level);
    if (w && *w != here) throw MathError(ErrorCode::NotHomogeneous, "mixed weights in " + p.str());
    w = here;
  }
  return *w;
}

FockPoly fock_derivation(const FockPoly& p) {
  FockPoly out = p.times_x(1);
  for (const auto& [mono, c] : p.terms())
    for (const auto& [j, e] : mono) out += FockPoly::monomial(mono, c).partial_x(j).times_x(j + 1);
  return out;
}

UnivarPoly phi_B(const FockPoly& p, const TruncatedSeries& b) {
  MultiPoly stripped;
  for (const auto& [mono, c] : p.terms()) stripped += MultiPoly::term(Monomial{{}, mono, 0, 0}, c);
  return phi_B(stripped, b);
}

namespace {

void partitions(int remaining, int max_part, ExponentList& current, std::vector<ExponentList>& out) {
  if (remaining == 0) {
    ExponentList sorted = current;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    for (int e = remaining / part; e >= 1; --e) {
      current.emplace_back(part, e);
      partitions(remaining - part * e, part - 1, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<FockPoly> fock_basis(int max_level) {
  std::vector<FockPoly> out;
  for (int level = 0; level <= max_level; ++level) {
    std::vector<ExponentList> parts;
    ExponentList current;
    partitions(level, level, current, parts);
    std::sort(parts.begin(), parts.end());
    for (auto& m : parts) out.push_back(FockPoly::monomial(std::move(m)));
  }
  return out;
}

FockPoly ladder_vector(int n) {
  FockPoly v = FockPoly::vacuum();
  for (int i = 0; i < n; ++i) v = L_op(-1, v);
  return v;
}

Rational f_rec(int m, int n) {
  if (m < -1 || n < 0)
    throw MathError(ErrorCode::IndexOutOfRange, "f_m(n) needs m >= -1 and n >= 0");
  if (m == -1) return Rational(1);
  // prev[k] = f_{row-1}(k), starting at row -1.
  std::vector<Rational> prev(static_cast<std::size_t>(n) + 1, Rational(1));
  for (int row = 0; row <= m; ++row) {
    std::vector<Rational> cur(static_cast<std::size_t>(n) + 1);
    cur[0] = row == 0 ? Rational(1, 2) : Rational(0);
    for (int k = 1; k <= n; ++k)
      cur[static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(k - 1)] + Rational(row + 1) * prev[static_cast<std::size_t>(k - 1)];
    prev = std::move(cur);
  }
  return prev[static_cast<std::size_t>(n)];
}

Rational f_closed(int m, const Rational& n) {
  if (m < -1) throw MathError(ErrorCode::IndexOutOfRange, "f_m needs m >= -1");
  if (m == -1) return Rational(1);
  Rational falling(1);
  for (int i = 0; i < m; ++i) falling *= n - Rational(i);
  return Rational(1, 2) * falling * (Rational(2) * n - Rational(m - 1));
}

FTable::FTable(int max_m, int max_n) : max_m_(max_m), max_n_(max_n) {
  if (max_m < -1 || max_n < 0) throw MathError(ErrorCode::IndexOutOfRange, "FTable needs max_m >= -1, max_n >= 0");
  rows_.emplace_back(static_cast<std::size_t>(max_n) + 1, Rational(1));
  for (int row = 0; row <= max_m; ++row) {
    const auto& prev = rows_.back();
    std::vector<Rational> cur(static_cast<std::size_t>(max_n) + 1);
    cur[0] = row == 0 ? Rational(1, 2) : Rational(0);
    for (std::size_t k = 1; k < cur.size(); ++k) cur[k] = cur[k - 1] + Rational(row + 1) * prev[k - 1];
    rows_.push_back(std::move(cur));
  }
}

const Rational& FTable::at(int m, int n) const {
  if (m < -1 || m > max_m_ || n < 0 || n > max_n_) throw MathError(ErrorCode::IndexOutOfRange, "outside the table");
  return rows_[static_cast<std::size_t>(m + 1)][static_cast<std::size_t>(n)];
}

std::string FTable::to_csv() const {
  std::ostringstream os;
  os << 'm';
  for (int n = 0; n <= max_n_; ++n) os << ',' << n;
  os << '\n';
  for (int m = -1; m <= max_m_; ++m) {
    os << m;
    for (int n = 0; n <= max_n_; ++n) os << ',' << at(m, n);
    os << '\n';
  }
  return os.str();
}

std::string FTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int m = -1; m <= max_m_; ++m) {
    nlohmann::json values = nlohmann::json::array();
    for (int n = 0; n <= max_n_; ++n) values.push_back(at(m, n).str());
    rows.push_back({{"m", m}, {"values", values}});
  }
  nlohmann::json doc{{"max_m", max_m_}, {"max_n", max_n_}, {"rows", rows}};
  return doc.dump(2);
}

UnivarPoly gen_umbral_shift_m(const TruncatedSeries& b, int m, const UnivarPoly& p) {
  if (m < -1) throw MathError(ErrorCode::IndexOutOfRange, "D_B(m) needs m >= -1");
  if (p.is_zero()) return {};
  const int d = p.degree();
  const auto seq = umbral_sequences(b, m == -1 ? d + 1 : d);
  const auto coords = expand_in_basis(seq, p);
  UnivarPoly out;
  for (int n = 0; n <= d; ++n) {
    const Rational& c = coords[static_cast<std::size_t>(n)];
    if (c.is_zero() || n - m < 0) continue;
    out += seq[static_cast<std::size_t>(n - m)] * (c * f_rec(m, n));
  }
  return out;
}

GenSeries<UnivarPoly> virasoro_w_operator(int m, const GenSeries<UnivarPoly>& s) {
  if (m < -1) throw MathError(ErrorCode::IndexOutOfRange, "needs m >= -1");
  const int order = s.order() + m;
  if (order < 0) throw MathError(ErrorCode::OrderTooSmall, "series too short for the w-operator");
  GenSeries<UnivarPoly> out(order);
  const Rational shift = Rational(m + 1, 2);
  for (int k = 0; k <= order; ++k) {
    const int j = k - m;
    if (j < 0 || j > s.order()) continue;
    out[k] = s[j] * (Rational(j) + shift);
  }
  return out;
}

ShefferValues sheffer_ts(int n, const Rational& x) {
  if (n < 0) throw MathError(ErrorCode::IndexOutOfRange, "t_n needs n >= 0");
  const Rational t = f_closed(n - 1, x + Rational(n));
  const Rational s = binomial(x + Rational(n + 1), n) - Rational(1, 2) * binomial(x + Rational(n), n - 1);
  return {t, s};
}

bool f_heuristic_cell(int l, int m, int n) {
  if (l < -1 || m < -1 || l + m < -1) throw MathError(ErrorCode::IndexOutOfRange, "needs l, m, l+m >= -1");
  const Rational lhs = Rational(l - m) * f_closed(l + m, Rational(n));
  const Rational rhs = f_closed(l, Rational(n - m)) * f_closed(m, Rational(n)) -
                       f_closed(m, Rational(n - l)) * f_closed(l, Rational(n));
  return lhs == rhs;
}

}  // namespace umbra
