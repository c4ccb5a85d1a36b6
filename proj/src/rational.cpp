#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "errors.hpp"

namespace coxhyp {

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) fail(ErrorCode::SyntaxError, "invalid rational literal '" + text + "'");
  mpz_class num(text.substr(num_begin, i - num_begin), 10);
  mpz_class den(1);
  if (i < text.size() && text[i] == '/') {
    ++i;
    size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) fail(ErrorCode::SyntaxError, "invalid rational literal '" + text + "'");
    den = mpz_class(text.substr(den_begin, i - den_begin), 10);
    if (den == 0) fail(ErrorCode::SyntaxError, "zero denominator in '" + text + "'");
  }
  if (i != text.size()) fail(ErrorCode::SyntaxError, "invalid rational literal '" + text + "'");
  if (neg) num = -num;
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::InvalidArgument, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(unsigned long e) const {
  Rational r(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "inverse of zero");
  Rational one(1);
  return one / *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace coxhyp
