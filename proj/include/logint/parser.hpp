#pragma once

// Recursive-descent reader for integrand expressions in x.
//
//   expr    := term (('+'|'-') term)* ;
//   term    := factor (('*'|'/') factor)* ;
//   factor  := base ('^' INTEGER)? ;
//   base    := 'x' | NUMBER | '(' expr ')' | '-' factor ;
//   NUMBER  := INTEGER ('/' INTEGER)? | INTEGER '.' DIGITS ;

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "logint/errors.hpp"
#include "logint/rational_function.hpp"

namespace logint {

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"operator", "end of input"});
    return f;
  }

 private:
  static constexpr unsigned kMaxExponent = 4096;

  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      skip_ws();
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    while (true) {
      skip_ws();
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        RationalFunction rhs = factor();
        if (rhs.numerator.is_zero()) throw DivisionByZeroPoly("division by an expression that simplifies to zero");
        acc = acc / rhs;
      } else {
        return acc;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction b = base();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      if (!is_digit(peek())) fail({"integer exponent"});
      BigInt e = parse_bigint(digits());
      if (e > kMaxExponent) throw DomainError("exponent exceeds " + std::to_string(kMaxExponent));
      b = pow(b, e.convert_to<unsigned>());
    }
    return b;
  }

  RationalFunction base() {
    skip_ws();
    char c = peek();
    if (c == 'x') {
      ++pos_;
      return from_polynomial(Polynomial::x());
    }
    if (is_digit(c)) return from_polynomial(Polynomial::constant(number()));
    if (accept('(')) {
      RationalFunction inner = expr();
      skip_ws();
      if (!accept(')')) fail({"')'", "operator"});
      return inner;
    }
    if (accept('-')) return -factor();
    fail({"'x'", "number", "'('", "'-'"});
  }

  Rational number() {
    std::string_view whole = digits();
    if (peek() == '.') {
      ++pos_;
      if (!is_digit(peek())) fail({"digit"});
      std::string_view frac = digits();
      return Rational::parse(std::string(whole) + "." + std::string(frac));
    }
    // INTEGER '/' INTEGER binds as a single literal.
    std::size_t save = pos_;
    skip_ws();
    if (accept('/')) {
      skip_ws();
      if (is_digit(peek())) {
        BigInt num = parse_bigint(whole);
        BigInt den = parse_bigint(digits());
        if (den == 0) throw DivisionByZeroPoly("literal with zero denominator");
        return Rational(num, den);
      }
    }
    pos_ = save;
    return Rational(parse_bigint(whole));
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c || pos_ >= text_.size()) return false;
    ++pos_;
    return true;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw SyntaxError(pos_, std::move(expected), found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RationalFunction parse_expression(std::string_view text) { return detail::ExpressionParser(text).parse(); }

/// Text form accepted back by parse_expression.
inline std::string render_expression(const RationalFunction& f) {
  if (f.numerator.is_zero() || f.scale.is_zero()) return "0";
  return "(" + f.scale.str() + ")*(" + f.numerator.str() + ")/(" + f.denominator.str() + ")";
}

}  // namespace logint
