#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "umbra/error.hpp"

namespace umbra {

/// Truncated series in the generating parameter w,
///   sum_{k <= order} coeff(k) w^k + O(w^{order+1}),
/// with coefficients in a ring T (MultiPoly, UnivarPoly, TruncatedSeries...).
/// T must be default-constructible to its zero and support +, - and *.
template <class T>
class GenSeries {
 public:
  GenSeries() : coeffs_(1) {}
  explicit GenSeries(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {}
  explicit GenSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw MathError(ErrorCode::InvalidArgument, "GenSeries needs at least one coefficient");
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  T& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }

  GenSeries truncated(int order) const {
    std::vector<T> v(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
    return GenSeries(std::move(v));
  }

  /// Applies f to every coefficient; the result type follows f.
  template <class F>
  auto map(F&& f) const -> GenSeries<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return GenSeries<U>(std::move(v));
  }

  friend GenSeries operator+(const GenSeries& a, const GenSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> v;
    v.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) v.push_back(a[k] + b[k]);
    return GenSeries(std::move(v));
  }
  friend GenSeries operator-(const GenSeries& a, const GenSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> v;
    v.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) v.push_back(a[k] - b[k]);
    return GenSeries(std::move(v));
  }
  /// Cauchy product truncated to the smaller order. Accumulation starts from
  /// an actual product so coefficient types that carry their own truncation
  /// order are never mixed with a default-constructed zero.
  friend GenSeries operator*(const GenSeries& a, const GenSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> v;
    v.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      T acc = a[0] * b[k];
      for (int i = 1; i <= k; ++i) acc = acc + a[i] * b[k - i];
      v.push_back(std::move(acc));
    }
    return GenSeries(std::move(v));
  }

  friend bool operator==(const GenSeries&, const GenSeries&) = default;

 private:
  std::vector<T> coeffs_;
};

/// First index (up to the shared order) where the two series differ, or -1.
template <class T>
int first_difference(const GenSeries<T>& a, const GenSeries<T>& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k)
    if (!(a[k] == b[k])) return k;
  return -1;
}

}  // namespace umbra
