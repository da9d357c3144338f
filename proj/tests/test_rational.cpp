#include "doctest.h"
#include "umbra/error.hpp"
#include "umbra/rational.hpp"
#include "umbra/univar_poly.hpp"

using umbra::Rational;

TEST_CASE("rational arithmetic is exact and canonical") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Rational(10, 5).str() == "2");
  CHECK(Rational(10, 5).is_integer());
  CHECK(Rational(-3, 4) < Rational(0));
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), umbra::MathError);
  CHECK_THROWS_AS(Rational::parse("x"), umbra::MathError);
  CHECK_THROWS_AS(Rational::parse(""), umbra::MathError);
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Rational(1, 0), umbra::MathError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), umbra::MathError);
  try {
    (void)(Rational(1) / Rational(0));
  } catch (const umbra::MathError& e) {
    CHECK(e.code() == umbra::ErrorCode::DivisionByZero);
  }
}

TEST_CASE("factorial and binomials") {
  CHECK(umbra::factorial(0) == Rational(1));
  CHECK(umbra::factorial(10) == Rational(3628800));
  // Pascal's rule as the oracle.
  for (int n = 1; n <= 15; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(umbra::binomial(n, k) == umbra::binomial(n - 1, k - 1) + umbra::binomial(n - 1, k));
  CHECK(umbra::binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(umbra::binomial(Rational(-1), 3) == Rational(-1));
  CHECK(umbra::binomial(Rational(5), -1) == Rational(0));
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= 8; ++k) CHECK(umbra::binomial(Rational(n), k) == umbra::binomial(n, k));
  CHECK(umbra::pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("univariate polynomials") {
  using umbra::UnivarPoly;
  const UnivarPoly p = UnivarPoly::parse("0,1,1");
  CHECK(p.degree() == 2);
  CHECK(p.pretty() == "x^2 + x");
  CHECK(p.to_csv() == "0,1,1");
  CHECK(UnivarPoly::parse("1,0,0").degree() == 0);
  CHECK(UnivarPoly{}.degree() == -1);
  CHECK(UnivarPoly{}.to_csv() == "0");
  CHECK((p * p).to_csv() == "0,0,1,2,1");
  CHECK(p.derivative().to_csv() == "1,2");
  CHECK(p.evaluate(Rational(3)) == Rational(12));
  CHECK((p - p).is_zero());
  CHECK(UnivarPoly::parse("1/2,-3").pretty() == "-3*x + 1/2");
}
