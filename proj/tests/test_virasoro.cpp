#include "doctest.h"
#include "umbra/umbral.hpp"
#include "umbra/verify.hpp"
#include "umbra/virasoro.hpp"

using namespace umbra;

namespace {

const FockPoly y = FockPoly::vacuum();
FockPoly mono(ExponentList e) { return FockPoly::monomial(std::move(e)); }

}  // namespace

TEST_CASE("Heisenberg generators") {
  CHECK(h_op(-1, y) == mono({{1, 1}}));
  CHECK(h_op(1, mono({{1, 1}})) == y);
  CHECK(h_op(0, y) == y);
  CHECK(h_op(-3, y) == Rational(1, 2) * mono({{3, 1}}));
  CHECK(h_op(2, mono({{2, 3}})) == Rational(6) * mono({{2, 2}}));
  CHECK(h_op(3, mono({{2, 3}})).is_zero());
}

TEST_CASE("Virasoro generators on small vectors") {
  CHECK(L_op(0, y) == Rational(1, 2) * y);
  CHECK(L_op(-1, y) == mono({{1, 1}}));
  CHECK(L_op(1, mono({{1, 1}})) == y);
  CHECK(L_op(1, y).is_zero());
  CHECK(L_op(2, y).is_zero());
}

TEST_CASE("weights") {
  CHECK(weight(y) == Rational(1, 2));
  CHECK(weight(mono({{1, 1}, {3, 1}})) == Rational(9, 2));
  CHECK(weight(mono({{2, 2}})) == Rational(9, 2));
  CHECK_THROWS_AS(weight(y + mono({{1, 1}})), MathError);
  CHECK_THROWS_AS(weight(FockPoly{}), MathError);
  for (const auto& p : fock_basis(6)) CHECK(L_op(0, p) == weight(p) * p);
}

TEST_CASE("basis enumeration counts partitions") {
  const int partitions[] = {1, 1, 2, 3, 5, 7, 11, 15};
  int total = 0;
  for (int level = 0; level <= 7; ++level) {
    total += partitions[level];
    CHECK(static_cast<int>(fock_basis(level).size()) == total);
  }
}

TEST_CASE("active modes cover the whole sum") {
  // Against a brute-force sum over a wide k window.
  for (const auto& p : fock_basis(5)) {
    for (int m = -3; m <= 3; ++m) {
      if (m == 0) continue;
      FockPoly brute;
      for (int k = -20; k <= 20; ++k) brute += h_op(m - k, h_op(k, p));
      CHECK(L_op(m, p) == Rational(1, 2) * brute);
    }
  }
}

TEST_CASE("bracket relations on a small window") {
  for (const auto& p : fock_basis(4))
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n) {
        FockPoly rhs = Rational(m - n) * L_op(m + n, p);
        if (m + n == 0) rhs += Rational(m * m * m - m, 12) * p;
        CHECK(L_op(m, L_op(n, p)) - L_op(n, L_op(m, p)) == rhs);
      }
}

TEST_CASE("L(-1) is the derivation") {
  for (const auto& p : fock_basis(6))
    CHECK(L_op(-1, p) == FockPoly::collapse_y(derivation_D(p.to_multipoly(0))));
  CHECK(fock_derivation(mono({{2, 1}})) == mono({{1, 1}, {2, 1}}) + mono({{3, 1}}));
}

TEST_CASE("f_m(n) recurrence and closed form") {
  CHECK(f_rec(-1, 5) == Rational(1));
  CHECK(f_rec(0, 0) == Rational(1, 2));
  CHECK(f_rec(1, 4) == Rational(16));
  CHECK(f_closed(2, Rational(3)) == Rational(15));
  CHECK(f_closed(3, Rational(3)) == Rational(12));
  for (int m = 1; m <= 8; ++m) CHECK(f_closed(m, Rational(0)) == Rational(0));
  for (int m = -1; m <= 8; ++m)
    for (int n = 0; n <= 20; ++n) CHECK(f_rec(m, n) == f_closed(m, Rational(n)));
  for (int n = 0; n <= 10; ++n)
    CHECK(f_rec(3, n) == Rational(n) * Rational(n - 1) * Rational(n - 1) * Rational(n - 2));
  CHECK_THROWS_AS(f_rec(-2, 0), MathError);
  CHECK_THROWS_AS(f_rec(0, -1), MathError);
}

TEST_CASE("f table serialisation") {
  const FTable t(3, 5);
  CHECK(t.to_csv().find("\n1,0,1,4,9,16,25\n") != std::string::npos);
  CHECK(t.to_csv().rfind("m,0,1,2,3,4,5\n", 0) == 0);
  CHECK(t.to_json().find("\"1/2\"") != std::string::npos);
  CHECK(t.at(0, 3) == Rational(7, 2));
}

TEST_CASE("ladder") {
  std::vector<FockPoly> v{y};
  for (int n = 1; n <= 7; ++n) v.push_back(L_op(-1, v.back()));
  CHECK(ladder_vector(4) == v[4]);
  for (int n = 0; n <= 6; ++n)
    for (int m = -1; m <= 6; ++m) {
      const FockPoly lhs = L_op(m, v[static_cast<std::size_t>(n)]);
      if (m > n) {
        CHECK(lhs.is_zero());
      } else {
        CHECK(lhs == f_rec(m, n) * v[static_cast<std::size_t>(n - m)]);
      }
    }
}

TEST_CASE("generalised umbral shift") {
  InstanceRng rng(31, "gen");
  const auto b = rng.delta(10);
  const auto seq = umbral_sequences(b, 8);
  const auto p = rng.poly(7);
  CHECK(gen_umbral_shift_m(b, -1, p) == shift_D(b, p));
  for (int n = 0; n <= 7; ++n)
    CHECK(gen_umbral_shift_m(b, 0, seq[static_cast<std::size_t>(n)]) ==
          (Rational(n) + Rational(1, 2)) * seq[static_cast<std::size_t>(n)]);
  CHECK(gen_umbral_shift_m(b, 1, seq[2]) == Rational(4) * seq[1]);
  CHECK(gen_umbral_shift_m(b, 3, seq[2]).is_zero());
}

TEST_CASE("umbral image of the ladder") {
  InstanceRng rng(32, "umbvir");
  const auto b = rng.delta(10);
  for (int n = 0; n <= 7; ++n) CHECK(shift_D(b, phi_B(ladder_vector(n), b)) == phi_B(ladder_vector(n + 1), b));
  CHECK(phi_B(y, b) == UnivarPoly::constant(Rational(1)));
  CHECK(phi_B(mono({{1, 2}}), b) == UnivarPoly::monomial(2, b[1] * b[1]));
}

TEST_CASE("Sheffer values") {
  CHECK(sheffer_ts(2, Rational(1)).s == Rational(9, 2));
  CHECK(sheffer_ts(0, Rational(-2)).t == Rational(1));
  CHECK(sheffer_ts(1, Rational(-2)).t == Rational(-1, 2));
  InstanceRng rng(33, "sheffer");
  for (int i = 0; i < 10; ++i) {
    const Rational x = rng.rational();
    for (int n = 1; n <= 8; ++n)
      CHECK(sheffer_ts(n, x).s == sheffer_ts(n - 1, x).s + sheffer_ts(n, x - Rational(1)).s);
  }
}

TEST_CASE("heuristic identity cells") {
  for (int l = -1; l <= 4; ++l)
    for (int m = -1; m <= 4; ++m)
      for (int n = 0; n <= 6; ++n)
        if (l + m >= -1 && l + m <= n) CHECK(f_heuristic_cell(l, m, n));
}
