#include "umbra/univar_poly.hpp"

#include <algorithm>
#include <sstream>

#include "umbra/error.hpp"

namespace umbra {

UnivarPoly::UnivarPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void UnivarPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UnivarPoly UnivarPoly::constant(const Rational& c) { return UnivarPoly(std::vector<Rational>{c}); }

UnivarPoly UnivarPoly::monomial(int degree, const Rational& c) {
  if (degree < 0) throw MathError(ErrorCode::IndexOutOfRange, "negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UnivarPoly(std::move(v));
}

UnivarPoly UnivarPoly::parse(std::string_view text) {
  std::vector<Rational> v;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    v.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return UnivarPoly(std::move(v));
}

Rational UnivarPoly::operator[](int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UnivarPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivarPoly UnivarPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return UnivarPoly(std::move(v));
}

UnivarPoly UnivarPoly::operator-() const {
  UnivarPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

UnivarPoly& UnivarPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UnivarPoly(std::move(v));
}

std::string UnivarPoly::to_csv() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ',';
    out += coeffs_[k].str();
  }
  return out;
}

std::string UnivarPoly::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace umbra
