#include <vector>

#include "doctest.h"
#include "umbra/series.hpp"
#include "umbra/verify.hpp"

using namespace umbra;

namespace {

TruncatedSeries ts(std::vector<long> c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  const int order = static_cast<int>(r.size()) - 1;
  return TruncatedSeries(order, std::move(r));
}

TruncatedSeries one(int n) { return TruncatedSeries::constant(Rational(1), n); }

std::vector<Rational> bell_oracle(int n) {
  std::vector<Rational> b{Rational(1)};
  for (int k = 0; k < n; ++k) {
    Rational next(0);
    for (int j = 0; j <= k; ++j) next += binomial(k, j) * b[static_cast<std::size_t>(j)];
    b.push_back(next);
  }
  return b;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const MathError& e) {
    return e.code();
  }
  FAIL("no MathError thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("egf view") {
  const TruncatedSeries e = TruncatedSeries::exp_t(6);
  for (int n = 0; n <= 6; ++n) CHECK(e.egf(n) == Rational(1));
  const std::vector<Rational> a{Rational(3), Rational(5), Rational(7)};
  const TruncatedSeries s = TruncatedSeries::from_egf(2, a);
  CHECK(s[2] == Rational(7, 2));
  CHECK(s.egf_coeffs() == a);
  CHECK(code_of([&] { (void)s[3]; }) == ErrorCode::OrderTooSmall);
}

TEST_CASE("mul") {
  CHECK(ts({1, 1, 0}) * ts({1, -1, 0}) == ts({1, 0, -1}));
  const TruncatedSeries sq = TruncatedSeries::exp_t(10) * TruncatedSeries::exp_t(10);
  for (int n = 0; n <= 10; ++n) {
    Rational conv(0);
    for (int k = 0; k <= n; ++k) conv += binomial(n, k);
    CHECK(sq.egf(n) == conv);
  }
  CHECK((ts({1, 2, 3}) * ts({1, 1, 1, 1, 1, 1})).order() == 2);
}

TEST_CASE("mul_inverse") {
  CHECK(mul_inverse(one(5)) == one(5));
  CHECK(mul_inverse(ts({1, -1, 0, 0, 0})) == ts({1, 1, 1, 1, 1}));
  const TruncatedSeries inv = mul_inverse(TruncatedSeries::exp_t(8));
  for (int n = 0; n <= 8; ++n) CHECK(inv.egf(n) == Rational(n % 2 ? -1 : 1));
  CHECK(inv * TruncatedSeries::exp_t(8) == one(8));
  CHECK(code_of([] { mul_inverse(ts({0, 1})); }) == ErrorCode::ZeroConstantTerm);
}

TEST_CASE("compose") {
  InstanceRng rng(1, "compose");
  const TruncatedSeries a = rng.series(7);
  CHECK(compose(a, TruncatedSeries::identity(7)) == a);
  const TruncatedSeries e = TruncatedSeries::exp_t(15);
  const TruncatedSeries bell = compose(e, e - one(15));
  const auto oracle = bell_oracle(15);
  for (int n = 0; n <= 15; ++n) CHECK(bell.egf(n) == oracle[static_cast<std::size_t>(n)]);
  CHECK(oracle[6] == Rational(203));
  CHECK(compose(ts({0, 0, 1}), ts({0, 2, 0})) == ts({0, 0, 4}));
  CHECK(code_of([] { compose(ts({1, 1}), ts({1, 1})); }) == ErrorCode::InnerConstantTerm);
}

TEST_CASE("compose is associative on random instances") {
  InstanceRng rng(2, "assoc");
  for (int i = 0; i < 5; ++i) {
    const auto a = rng.series(8), b = rng.zero_constant(8), c = rng.zero_constant(8);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("comp_inverse") {
  CHECK(comp_inverse(TruncatedSeries::identity(6)) == TruncatedSeries::identity(6));
  const TruncatedSeries l = comp_inverse(TruncatedSeries::exp_t(10) - one(10));
  for (int n = 1; n <= 10; ++n) CHECK(l[n] == Rational(n % 2 ? 1 : -1, n));
  CHECK(l[0] == Rational(0));
  const TruncatedSeries geo = ts({0, 1, 1, 1, 1, 1, 1});
  CHECK(comp_inverse(geo) == ts({0, 1, -1, 1, -1, 1, -1}));
  InstanceRng rng(3, "rev");
  for (int i = 0; i < 5; ++i) {
    const auto b = rng.delta(9);
    CHECK(compose(b, comp_inverse(b)) == TruncatedSeries::identity(9));
    CHECK(compose(comp_inverse(b), b) == TruncatedSeries::identity(9));
  }
  CHECK(code_of([] { comp_inverse(ts({0, 0, 1})); }) == ErrorCode::NotDeltaSeries);
  CHECK(code_of([] { comp_inverse(ts({1, 1, 1})); }) == ErrorCode::NotDeltaSeries);
}

TEST_CASE("shift_egf") {
  const TruncatedSeries e = TruncatedSeries::exp_t(6);
  CHECK(shift_egf(e, 1) == TruncatedSeries::exp_t(5));
  CHECK(shift_egf(TruncatedSeries::identity(4), 1) == one(3));
  CHECK(shift_egf(one(4), -1) == TruncatedSeries::identity(5));
  const std::vector<Rational> below{Rational(7), Rational(9)};
  const TruncatedSeries s = shift_egf(one(3), -2, below);
  CHECK(s.egf(0) == Rational(9));
  CHECK(s.egf(1) == Rational(7));
  CHECK(s.egf(2) == Rational(1));
  InstanceRng rng(4, "shift");
  const auto a = rng.series(8);
  CHECK(shift_egf(a, 1) == a.derivative());
  CHECK(shift_egf(shift_egf(a, 2), 3) == shift_egf(a, 5));
  CHECK(shift_egf(shift_egf(a, -3), 3) == a);
}

TEST_CASE("b_star") {
  CHECK(b_star(TruncatedSeries::identity(5)) == one(4));
  CHECK(b_star(TruncatedSeries::exp_t(8) - one(8)) == ts({1, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(b_star(ts({0, 1, 1, 1, 1, 1, 1, 1})) == ts({1, 2, 1, 0, 0, 0, 0}));
  InstanceRng rng(5, "bstar");
  for (int i = 0; i < 5; ++i) {
    const auto b = rng.delta(9);
    const auto star = b_star(b);
    CHECK(star == mul_inverse(comp_inverse(b).derivative()).truncated(star.order()));
  }
  CHECK(code_of([] { b_star(ts({0, 0, 1})); }) == ErrorCode::NotDeltaSeries);
}

TEST_CASE("exp and log") {
  CHECK(exp_series(TruncatedSeries(5)) == one(5));
  CHECK(exp_series(TruncatedSeries::identity(7)) == TruncatedSeries::exp_t(7));
  const TruncatedSeries log1p = log_series(ts({1, 1, 0, 0, 0, 0, 0, 0}));
  for (int n = 1; n <= 7; ++n) CHECK(log1p[n] == Rational(n % 2 ? 1 : -1, n));
  CHECK(exp_series(log1p) == ts({1, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(log_series(one(5)) == TruncatedSeries(5));
  CHECK(log_series(TruncatedSeries::exp_t(7)) == TruncatedSeries::identity(7));
  InstanceRng rng(6, "explog");
  for (int i = 0; i < 5; ++i) {
    const auto a = rng.zero_constant(8);
    CHECK(log_series(exp_series(a)) == a);
    const auto u = rng.unit(8);
    CHECK(exp_series(log_series(u)) == u);
  }
  CHECK(code_of([] { exp_series(ts({1, 1})); }) == ErrorCode::NonzeroConstantTerm);
  CHECK(code_of([] { log_series(ts({2, 1})); }) == ErrorCode::ConstantTermNotOne);
}

TEST_CASE("taylor expansion and the composite derivative expansion") {
  InstanceRng rng(7, "faa");
  const auto f = rng.series(12);
  const auto g = rng.delta(12);
  const auto lhs = taylor_expand(compose(f, g)).truncated(6);
  const auto rhs = composite_derivative_expansion(f, g, 6);
  for (int k = 0; k <= 6; ++k)
    for (int j = 0; j <= 6; ++j) CHECK(lhs[k][j] == rhs[k][j]);
  const auto ex = taylor_expand(TruncatedSeries::exp_t(6));
  for (int k = 0; k <= 6; ++k) CHECK(ex[k] == (Rational(1) / factorial(k)) * TruncatedSeries::exp_t(6 - k));
}
