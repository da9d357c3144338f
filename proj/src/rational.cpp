#include "umbra/rational.hpp"

#include <cctype>
#include <ostream>

#include "umbra/error.hpp"

namespace umbra {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::InnerConstantTerm: return "InnerConstantTerm";
    case ErrorCode::NotDeltaSeries: return "NotDeltaSeries";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::UnsupportedVariable: return "UnsupportedVariable";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::UnknownIdentityTag: return "UnknownIdentityTag";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw MathError(ErrorCode::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw MathError(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw MathError(ErrorCode::DivisionByZero, "rational with zero denominator");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError(ErrorCode::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(int n) {
  if (n < 0) throw MathError(ErrorCode::IndexOutOfRange, "factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational binomial(int n, int k) {
  if (n < 0) throw MathError(ErrorCode::IndexOutOfRange, "binomial with negative top index");
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

Rational binomial(const Rational& x, int k) {
  if (k < 0) return Rational(0);
  Rational falling(1);
  for (int i = 0; i < k; ++i) falling *= x - Rational(i);
  return falling / factorial(k);
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace umbra
