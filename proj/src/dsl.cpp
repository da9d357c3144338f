#include "umbra/dsl.hpp"

#include <cctype>

namespace umbra::dsl {

std::string_view to_string(Func f) noexcept {
  switch (f) {
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Inv: return "inv";
    case Func::Rev: return "rev";
  }
  return "?";
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

std::string syntax_message(std::size_t offset, const std::vector<std::string>& expected, const std::string& found) {
  return "syntax error at offset " + std::to_string(offset) + ": expected one of {" + join(expected) + "}, found " +
         found;
}

const std::vector<std::string> kAtomStart{"rational", "t", "(", "exp", "log", "inv", "rev", "-"};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"+", "-", "*", "/", "^", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const std::string found = at_end() ? "end of input" : "'" + std::string(1, text_[pos_]) + "'";
    throw SyntaxError(pos_, std::move(expected), found);
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (true) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return left;
      ++pos_;
      ExprPtr right = term();
      left = make(Expr{c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, {left->span.begin, right->span.end}, {}, {}, 0,
                       left, right});
    }
  }

  ExprPtr term() {
    ExprPtr left = unary();
    while (true) {
      skip_ws();
      const char c = peek();
      if (c != '*' && c != '/') return left;
      ++pos_;
      ExprPtr right = unary();
      left = make(Expr{c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, {left->span.begin, right->span.end}, {}, {}, 0,
                       left, right});
    }
  }

  ExprPtr unary() {
    skip_ws();
    if (peek() == '-') {
      const std::size_t begin = pos_++;
      ExprPtr operand = unary();
      return make(Expr{Expr::Kind::Neg, {begin, operand->span.end}, {}, {}, 0, operand, nullptr});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (!is_digit(peek())) fail({"nonnegative integer"});
    const std::size_t begin = pos_;
    unsigned long long value = 0;
    while (is_digit(peek())) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > 100000) {
        pos_ = begin;
        fail({"exponent <= 100000"});
      }
      ++pos_;
    }
    Expr e{Expr::Kind::Pow, {base->span.begin, pos_}, {}, {}, static_cast<unsigned>(value), base, nullptr};
    return make(std::move(e));
  }

  std::string digits() {
    const std::size_t begin = pos_;
    while (is_digit(peek())) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  ExprPtr atom() {
    skip_ws();
    const std::size_t begin = pos_;
    const char c = peek();
    if (is_digit(c)) {
      const std::string num = digits();
      std::string den = "1";
      if (peek() == '/' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) {
        ++pos_;
        const std::size_t den_begin = pos_;
        den = digits();
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = den_begin;
          fail({"positive integer"});
        }
      }
      return make(Expr{Expr::Kind::Literal, {begin, pos_}, Rational::parse(num + "/" + den), {}, 0, nullptr, nullptr});
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      skip_ws();
      if (peek() != ')') fail({"+", "-", "*", "/", "^", ")"});
      ++pos_;
      return inner;
    }
    if (is_alpha(c)) {
      while (is_alpha(peek())) ++pos_;
      const std::string_view word = text_.substr(begin, pos_ - begin);
      if (word == "t") return make(Expr{Expr::Kind::Var, {begin, pos_}, {}, {}, 0, nullptr, nullptr});
      Func f;
      if (word == "exp") {
        f = Func::Exp;
      } else if (word == "log") {
        f = Func::Log;
      } else if (word == "inv") {
        f = Func::Inv;
      } else if (word == "rev") {
        f = Func::Rev;
      } else {
        pos_ = begin;
        fail(kAtomStart);
      }
      skip_ws();
      if (peek() != '(') fail({"("});
      ++pos_;
      ExprPtr arg = expr();
      skip_ws();
      if (peek() != ')') fail({"+", "-", "*", "/", "^", ")"});
      ++pos_;
      return make(Expr{Expr::Kind::Apply, {begin, pos_}, {}, f, 0, arg, nullptr});
    }
    fail(kAtomStart);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

std::string literal_text(const Rational& r) {
  // Negative literals only arise from hand-built trees; print them as negation.
  return r.sign() < 0 ? "(-" + (-r).str() + ")" : r.str();
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error(syntax_message(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

EvalError::EvalError(ErrorCode code, Span span, const std::string& subexpr, const std::string& message)
    : MathError(code, message + " [in '" + subexpr + "' at " + std::to_string(span.begin) + ".." +
                          std::to_string(span.end) + "]"),
      span_(span),
      subexpr_(subexpr) {}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Literal: return a.value == b.value;
    case Expr::Kind::Var: return true;
    case Expr::Kind::Neg: return structurally_equal(*a.lhs, *b.lhs);
    case Expr::Kind::Pow: return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    case Expr::Kind::Apply: return a.func == b.func && structurally_equal(*a.lhs, *b.lhs);
    default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal: return literal_text(e.value);
    case Expr::Kind::Var: return "t";
    case Expr::Kind::Apply: return std::string(to_string(e.func)) + "(" + print(*e.lhs) + ")";
    case Expr::Kind::Pow: {
      // The base must print as a single atom; a literal p/q re-lexes as one token.
      const bool atomic = e.lhs->kind == Expr::Kind::Var || e.lhs->kind == Expr::Kind::Apply ||
                          (e.lhs->kind == Expr::Kind::Literal && e.lhs->value.sign() >= 0);
      const std::string base = print(*e.lhs);
      return (atomic ? base : wrap(base)) + "^" + std::to_string(e.exponent);
    }
    case Expr::Kind::Neg: {
      const std::string inner = print(*e.lhs);
      return "-" + (precedence(e.lhs->kind) < precedence(Expr::Kind::Neg) ? wrap(inner) : inner);
    }
    default: {
      const int p = precedence(e.kind);
      std::string left = print(*e.lhs);
      std::string right = print(*e.rhs);
      if (precedence(e.lhs->kind) < p) left = wrap(left);
      const bool right_assoc_guard = e.kind == Expr::Kind::Sub || e.kind == Expr::Kind::Div;
      if (precedence(e.rhs->kind) < p || (right_assoc_guard && precedence(e.rhs->kind) == p)) right = wrap(right);
      // A digit right after "/" would re-lex as part of a rational token.
      if (e.kind == Expr::Kind::Div && is_digit(right.front())) right = wrap(right);
      const char* op = e.kind == Expr::Kind::Add ? "+" : e.kind == Expr::Kind::Sub ? "-" : e.kind == Expr::Kind::Mul ? "*" : "/";
      return left + op + right;
    }
  }
}

namespace {

TruncatedSeries eval_node(const Expr& e, int order, std::string_view source);

TruncatedSeries eval_checked(const Expr& e, int order, std::string_view source) {
  try {
    return eval_node(e, order, source);
  } catch (const EvalError&) {
    throw;
  } catch (const MathError& err) {
    const std::string sub = e.span.end <= source.size() && e.span.begin < e.span.end
                                ? std::string(source.substr(e.span.begin, e.span.end - e.span.begin))
                                : print(e);
    throw EvalError(err.code(), e.span, sub, err.detail());
  }
}

TruncatedSeries eval_node(const Expr& e, int order, std::string_view source) {
  switch (e.kind) {
    case Expr::Kind::Literal: return TruncatedSeries::constant(e.value, order);
    case Expr::Kind::Var: return TruncatedSeries::identity(order);
    case Expr::Kind::Neg: return -eval_checked(*e.lhs, order, source);
    case Expr::Kind::Add: return eval_checked(*e.lhs, order, source) + eval_checked(*e.rhs, order, source);
    case Expr::Kind::Sub: return eval_checked(*e.lhs, order, source) - eval_checked(*e.rhs, order, source);
    case Expr::Kind::Mul: return eval_checked(*e.lhs, order, source) * eval_checked(*e.rhs, order, source);
    case Expr::Kind::Div: {
      const TruncatedSeries num = eval_checked(*e.lhs, order, source);
      const TruncatedSeries den = eval_checked(*e.rhs, order, source);
      return num * mul_inverse(den);
    }
    case Expr::Kind::Pow: {
      const TruncatedSeries base = eval_checked(*e.lhs, order, source);
      TruncatedSeries acc = TruncatedSeries::constant(Rational(1), order);
      for (unsigned i = 0; i < e.exponent; ++i) acc = acc * base;
      return acc;
    }
    case Expr::Kind::Apply: {
      const TruncatedSeries arg = eval_checked(*e.lhs, order, source);
      switch (e.func) {
        case Func::Exp: return exp_series(arg);
        case Func::Log: return log_series(arg);
        case Func::Inv: return mul_inverse(arg);
        case Func::Rev: return comp_inverse(arg);
      }
    }
  }
  throw MathError(ErrorCode::InvalidArgument, "malformed expression tree");
}

}  // namespace

TruncatedSeries eval(const Expr& e, int order, std::string_view source) {
  if (order < 0) throw MathError(ErrorCode::InvalidArgument, "negative truncation order");
  return eval_checked(e, order, source);
}

TruncatedSeries eval_text(std::string_view text, int order) { return eval(*parse(text), order, text); }

std::string_view grammar_help() noexcept {
  return "  expr     := term ((\"+\" | \"-\") term)*\n"
         "  term     := unary ((\"*\" | \"/\") unary)*\n"
         "  unary    := \"-\" unary | power\n"
         "  power    := atom (\"^\" nat)?\n"
         "  atom     := rational | \"t\" | \"(\" expr \")\" | func \"(\" expr \")\"\n"
         "  func     := \"exp\" | \"log\" | \"inv\" | \"rev\"\n"
         "  rational := int (\"/\" posint)?\n"
         "  (no implicit multiplication: write 2*t, not 2t)\n";
}

}  // namespace umbra::dsl
