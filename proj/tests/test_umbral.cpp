#include "doctest.h"
#include "umbra/umbral.hpp"
#include "umbra/verify.hpp"

using namespace umbra;

namespace {

TruncatedSeries touchard(int n) { return TruncatedSeries::exp_t(n) - TruncatedSeries::constant(Rational(1), n); }

TruncatedSeries geometric_delta(int n) {
  std::vector<Rational> c{Rational(0)};
  for (int k = 1; k <= n; ++k) c.emplace_back(1);
  return TruncatedSeries(n, std::move(c));
}

/// Stirling numbers of the second kind from their recurrence; the Touchard
/// polynomials are sum_j S(n,j) x^j.
UnivarPoly touchard_oracle(int n) {
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(n) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0)));
  s[0][0] = Rational(1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      s[i][j] = Rational(j) * s[i - 1][j] + s[i - 1][j - 1];
  return UnivarPoly(s[static_cast<std::size_t>(n)]);
}

}  // namespace

TEST_CASE("pairing") {
  for (int k = 0; k <= 5; ++k)
    for (int n = 0; n <= 5; ++n) {
      const auto a = TruncatedSeries::monomial(k, Rational(1) / factorial(k), 6);
      CHECK(pairing(a, UnivarPoly::monomial(n)) == Rational(k == n ? 1 : 0));
    }
  for (int n = 0; n <= 6; ++n) CHECK(pairing(TruncatedSeries::exp_t(6), UnivarPoly::monomial(n)) == Rational(1));
  InstanceRng rng(21, "pair");
  const auto a = rng.series(7);
  CHECK(pairing(a, exp_xB(TruncatedSeries::identity(7), 7)) == a);
  CHECK_THROWS_AS(pairing(TruncatedSeries::exp_t(2), UnivarPoly::monomial(3)), MathError);
}

TEST_CASE("umbral sequences") {
  for (int n = 0; n <= 6; ++n) CHECK(umbral_sequence(TruncatedSeries::identity(8), n) == UnivarPoly::monomial(n));
  CHECK(umbral_sequence(touchard(4), 2) == UnivarPoly::parse("0,1,1"));
  const auto seq = umbral_sequences(touchard(10), 10);
  for (int n = 0; n <= 10; ++n) CHECK(seq[static_cast<std::size_t>(n)] == touchard_oracle(n));
  InstanceRng rng(22, "seq");
  const auto b = rng.delta(8);
  CHECK(umbral_sequence(b, 0) == UnivarPoly::constant(Rational(1)));
  // Binomial type: B_n(x+y) = sum C(n,k) B_k(x) B_{n-k}(y), checked at x = 2, y = -1/3.
  const auto bs = umbral_sequences(b, 8);
  for (int n = 0; n <= 8; ++n) {
    Rational rhs(0);
    for (int k = 0; k <= n; ++k)
      rhs += binomial(n, k) * bs[static_cast<std::size_t>(k)].evaluate(Rational(2)) *
             bs[static_cast<std::size_t>(n - k)].evaluate(Rational(-1, 3));
    CHECK(bs[static_cast<std::size_t>(n)].evaluate(Rational(5, 3)) == rhs);
  }
  CHECK_THROWS_AS(umbral_sequence(TruncatedSeries::monomial(2, Rational(1), 5), 2), MathError);
}

TEST_CASE("theta and the umbral shift") {
  InstanceRng rng(23, "theta");
  const UnivarPoly p = rng.poly(6);
  CHECK(theta(TruncatedSeries::identity(8), p) == p);
  CHECK(theta(touchard(4), UnivarPoly::monomial(2)) == UnivarPoly::parse("0,1,1"));
  CHECK(theta(rng.delta(4), UnivarPoly::constant(Rational(1))) == UnivarPoly::constant(Rational(1)));
  CHECK(shift_D(TruncatedSeries::identity(9), p) == UnivarPoly::monomial(1) * p);
  CHECK(shift_D(touchard(4), UnivarPoly::constant(Rational(1))) == UnivarPoly::monomial(1));
  CHECK(shift_D(touchard(5), UnivarPoly::parse("0,1,1")) == UnivarPoly::parse("0,1,3,1"));
}

TEST_CASE("generalised shift D^A_B") {
  InstanceRng rng(24, "dab");
  const auto b = rng.delta(9);
  const auto p = rng.poly(6);
  CHECK(gen_shift_DAB(TruncatedSeries::exp_t(9), b, p) == shift_D(b, p));
  for (int n = 0; n <= 5; ++n)
    CHECK(gen_shift_DAB(TruncatedSeries::exp_t(9), TruncatedSeries::identity(9), UnivarPoly::monomial(n)) ==
          UnivarPoly::monomial(n + 1));
  const auto a = rng.series(9);
  CHECK(gen_shift_DAB(a, b, UnivarPoly::constant(Rational(1))) == UnivarPoly::monomial(1, a.egf(1) * b[1]));
}

TEST_CASE("adjoint identities") {
  InstanceRng rng(25, "adj");
  const auto a = rng.series(12);
  CHECK(adjoint_report(AdjointKind::Subst, a, TruncatedSeries::identity(12), 8).holds);
  CHECK(adjoint_report(AdjointKind::Subst, a, touchard(12), 8).holds);
  CHECK(adjoint_report(AdjointKind::Shift, a, geometric_delta(12), 8).holds);
  for (auto kind : {AdjointKind::Mul, AdjointKind::Diff, AdjointKind::Subst, AdjointKind::Shift, AdjointKind::AdjNew}) {
    const auto report = adjoint_report(kind, rng.series(12), rng.delta(12), 8);
    CHECK(report.holds);
    CHECK(report.checks > 0);
    CHECK_FALSE(report.first_failure.has_value());
  }
}

TEST_CASE("adjoint kinds parse") {
  CHECK(parse_adjoint_kind("shift") == AdjointKind::Shift);
  CHECK(to_string(AdjointKind::AdjNew) == "adjnew");
  try {
    parse_adjoint_kind("bogus");
    FAIL("expected UnknownIdentityTag");
  } catch (const MathError& e) {
    CHECK(e.code() == ErrorCode::UnknownIdentityTag);
  }
}

TEST_CASE("series of the derivative") {
  // e^{d/dx} p(x) = p(x + 1).
  const UnivarPoly p = UnivarPoly::parse("1,2,3,4");
  const UnivarPoly q = apply_series_of_derivative(TruncatedSeries::exp_t(5), p);
  for (int x = -3; x <= 3; ++x) CHECK(q.evaluate(Rational(x)) == p.evaluate(Rational(x + 1)));
}
