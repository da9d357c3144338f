#include <algorithm>

#include "doctest.h"
#include "umbra/dsl.hpp"
#include "umbra/verify.hpp"

using namespace umbra;
using namespace umbra::dsl;

namespace {

std::size_t syntax_offset(std::string_view text) {
  try {
    parse(text);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  FAIL("expected a syntax error for " << text);
  return 0;
}

/// Random expression text over the grammar, built without the printer.
std::string random_text(InstanceRng& rng, int depth) {
  if (depth == 0 || rng.integer(0, 3) == 0) {
    if (rng.integer(0, 1) == 0) return "t";
    return std::to_string(rng.integer(0, 9)) + (rng.integer(0, 1) ? "/" + std::to_string(rng.integer(1, 9)) : "");
  }
  switch (rng.integer(0, 6)) {
    case 0: return random_text(rng, depth - 1) + " + " + random_text(rng, depth - 1);
    case 1: return random_text(rng, depth - 1) + "-" + random_text(rng, depth - 1);
    case 2: return random_text(rng, depth - 1) + "*" + random_text(rng, depth - 1);
    case 3: return random_text(rng, depth - 1) + "/(" + random_text(rng, depth - 1) + ")";
    case 4: return "(" + random_text(rng, depth - 1) + ")^" + std::to_string(rng.integer(0, 3));
    case 5: return "-" + random_text(rng, depth - 1);
    default: {
      const char* f[] = {"exp", "log", "inv", "rev"};
      return std::string(f[rng.integer(0, 3)]) + "(" + random_text(rng, depth - 1) + ")";
    }
  }
}

}  // namespace

TEST_CASE("parse structure") {
  CHECK(parse("t")->kind == Expr::Kind::Var);
  const auto e = parse("exp(t)-1");
  REQUIRE(e->kind == Expr::Kind::Sub);
  CHECK(e->lhs->kind == Expr::Kind::Apply);
  CHECK(e->lhs->func == Func::Exp);
  CHECK(e->rhs->kind == Expr::Kind::Literal);
  CHECK(e->rhs->value == Rational(1));
  const auto p = parse("1-t-t^2*3");
  CHECK(p->kind == Expr::Kind::Sub);
  CHECK(p->lhs->kind == Expr::Kind::Sub);
  CHECK(p->rhs->kind == Expr::Kind::Mul);
  CHECK(p->rhs->lhs->kind == Expr::Kind::Pow);
  const auto half = parse("1/2");
  CHECK(half->kind == Expr::Kind::Literal);
  CHECK(half->value == Rational(1, 2));
  CHECK(parse("1 / 2")->kind == Expr::Kind::Div);
}

TEST_CASE("syntax errors") {
  CHECK(syntax_offset("t/(1-t") == 6);
  try {
    parse("t/(1-t");
  } catch (const SyntaxError& e) {
    const auto& ex = e.expected();
    CHECK(std::find(ex.begin(), ex.end(), ")") != ex.end());
  }
  CHECK(syntax_offset("2t") == 1);
  CHECK(syntax_offset("") == 0);
  CHECK(syntax_offset("sin(t)") == 0);
  CHECK(syntax_offset("t^") == 2);
  CHECK(syntax_offset("t^-1") == 2);
  CHECK(syntax_offset("1/0") == 2);
  CHECK(syntax_offset("exp t") == 4);
  CHECK(syntax_offset("(t))") == 3);
}

TEST_CASE("evaluation") {
  CHECK(eval_text("t", 5) == TruncatedSeries::identity(5));
  const auto e = eval_text("exp(t)-1", 5);
  const std::vector<Rational> egf{Rational(0), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)};
  CHECK(e.egf_coeffs() == egf);
  const auto g = eval_text("t/(1-t)", 4);
  CHECK(g == TruncatedSeries(4, {Rational(0), Rational(1), Rational(1), Rational(1), Rational(1)}));
  for (int n = 1; n <= 12; ++n) CHECK(eval_text("rev(exp(t)-1)", n) == eval_text("log(1+t)", n));
  CHECK(eval_text("inv(1-t)", 6) == eval_text("1/(1-t)", 6));
  CHECK(eval_text("(1+t)^3", 4) == eval_text("1+3*t+3*t^2+t^3", 4));
  CHECK(eval_text("t^0", 3) == TruncatedSeries::constant(Rational(1), 3));
  CHECK(eval_text("--t", 3) == TruncatedSeries::identity(3));
}

TEST_CASE("evaluation errors carry spans") {
  const std::vector<std::pair<std::string, ErrorCode>> cases{
      {"1/t", ErrorCode::ZeroConstantTerm},         {"t + log(2+t)", ErrorCode::ConstantTermNotOne},
      {"exp(1+t)", ErrorCode::NonzeroConstantTerm}, {"rev(t^2)", ErrorCode::NotDeltaSeries},
      {"inv(exp(t)-1)", ErrorCode::ZeroConstantTerm},
  };
  for (const auto& [text, code] : cases) {
    try {
      eval_text(text, 6);
      FAIL("expected EvalError for " << text);
    } catch (const EvalError& e) {
      CHECK(e.code() == code);
      CHECK(e.span().begin < e.span().end);
      CHECK(e.span().end <= text.size());
    }
  }
  try {
    eval_text("t + log(2+t)", 6);
  } catch (const EvalError& e) {
    CHECK(e.subexpression() == "log(2+t)");
    CHECK(e.span().begin == 4);
  }
}

TEST_CASE("print round trip") {
  InstanceRng rng(41, "dsl");
  for (int i = 0; i < 300; ++i) {
    const std::string text = random_text(rng, 4);
    const auto e = parse(text);
    const std::string printed = print(*e);
    const auto again = parse(printed);
    CHECK_MESSAGE(structurally_equal(*e, *again), text << " -> " << printed);
    CHECK(print(*again) == printed);
  }
  CHECK(print(*parse("(1/2)^2")) == "1/2^2");
  CHECK(structurally_equal(*parse(print(*parse("1/(2)"))), *parse("1/(2)")));
  CHECK(print(*parse("t-(t-t)")) == "t-(t-t)");
}
