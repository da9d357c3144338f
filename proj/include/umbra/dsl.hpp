#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/error.hpp"
#include "umbra/rational.hpp"
#include "umbra/series.hpp"

namespace umbra::dsl {

// Grammar (whitespace is ignored between tokens):
//   expr     := term (("+" | "-") term)*
//   term     := unary (("*" | "/") unary)*
//   unary    := "-" unary | power
//   power    := atom ("^" nat)?
//   atom     := rational | "t" | "(" expr ")" | func "(" expr ")"
//   func     := "exp" | "log" | "inv" | "rev"
//   rational := int ("/" posint)?
// A digit string followed directly by "/" and another digit string is a
// single rational literal, so "1/2" is the constant one half.

/// Byte range [begin, end) in the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

enum class Func { Exp, Log, Inv, Rev };
std::string_view to_string(Func f) noexcept;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Literal, Var, Neg, Add, Sub, Mul, Div, Pow, Apply };

  Kind kind;
  Span span;
  Rational value;           // Literal
  Func func = Func::Exp;    // Apply
  unsigned exponent = 0;    // Pow
  ExprPtr lhs;              // Neg / Pow / Apply operand, binary left
  ExprPtr rhs;              // binary right
};

/// Structural equality; spans are ignored.
bool structurally_equal(const Expr& a, const Expr& b);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// A series-layer domain error tagged with the subexpression that raised it.
class EvalError : public MathError {
 public:
  EvalError(ErrorCode code, Span span, const std::string& subexpr, const std::string& message);

  Span span() const noexcept { return span_; }
  const std::string& subexpression() const noexcept { return subexpr_; }

 private:
  Span span_;
  std::string subexpr_;
};

ExprPtr parse(std::string_view text);

/// Canonical text that parses back to a structurally equal tree.
std::string print(const Expr& e);

/// Evaluates to a series known to `order`. Domain errors surface as EvalError
/// carrying the offending span; `source` (when given) is used to quote it.
TruncatedSeries eval(const Expr& e, int order, std::string_view source = {});

/// parse + eval.
TruncatedSeries eval_text(std::string_view text, int order);

/// The grammar as printed in usage messages.
std::string_view grammar_help() noexcept;

}  // namespace umbra::dsl
