#include "parser.hpp"

#include <cctype>
#include <string>

#include "errors.hpp"

namespace coxhyp {

namespace {

constexpr int32_t kMaxExponent = 1 << 20;

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    skip_ws();
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::SyntaxError, "syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial parse_expr() {
    skip_ws();
    bool negate = false;
    if (consume('-'))
      negate = true;
    else
      consume('+');
    Polynomial p = parse_term();
    if (negate) p = -p;
    for (;;) {
      skip_ws();
      if (consume('+')) {
        p = p + parse_term();
      } else if (consume('-')) {
        p = p - parse_term();
      } else {
        return p;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial p = parse_factor();
    for (;;) {
      skip_ws();
      if (consume('*'))
        p = p * parse_factor();
      else
        return p;
    }
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    skip_ws();
    if (consume('^')) {
      int32_t e = parse_posint();
      // Constant bases keep exact rational powers; monomials use poly power.
      base = base.pow(static_cast<uint32_t>(e));
    }
    return base;
  }

  int32_t parse_posint() {
    skip_ws();
    size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == begin) error("expected a positive integer");
    long long value = 0;
    for (size_t i = begin; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > kMaxExponent) error("integer too large here");
    }
    if (value <= 0) error("expected a positive integer");
    return static_cast<int32_t>(value);
  }

  Polynomial parse_atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = parse_expr();
      skip_ws();
      if (!consume(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    if (c == '\0') error("unexpected end of input");
    error(std::string("unexpected character '") + c + "'");
  }

  Polynomial parse_number() {
    size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    mpz_class num(std::string(text_.substr(begin, pos_ - begin)), 10);
    // Rational literal: integer '/' posint, nothing else uses '/'.
    size_t mark = pos_;
    skip_ws();
    if (consume('/')) {
      skip_ws();
      size_t den_begin = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den_begin) error("expected a positive integer denominator");
      mpz_class den(std::string(text_.substr(den_begin, pos_ - den_begin)), 10);
      if (den == 0) error("zero denominator");
      return Polynomial::constant(ring_, Rational(num, den));
    }
    pos_ = mark;
    return Polynomial::constant(ring_, Rational(num));
  }

  Polynomial parse_identifier() {
    size_t begin = pos_;
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(begin, pos_ - begin));
    auto idx = ring_->var_index(name);
    if (!idx) {
      pos_ = begin;
      fail(ErrorCode::UnknownVariable,
           "unknown variable '" + name + "' at position " + std::to_string(begin));
    }
    return Polynomial::variable(ring_, *idx);
  }

  std::string_view text_;
  const RingPtr& ring_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  if (!ring) fail(ErrorCode::Internal, "parse_polynomial: null ring");
  return Parser(text, ring).run();
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace coxhyp
