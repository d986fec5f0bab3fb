#pragma once

#include <cctype>
#include <functional>
#include <string>

#include "errors.hpp"
#include "lattice.hpp"

namespace surfcalc {

/// Maps an identifier occurring in an expression to a divisor class.
using NameResolver = std::function<DivisorClass(const std::string&)>;

namespace detail {

class ExprParser {
public:
  ExprParser(const std::string& text, const NameResolver& resolve)
      : text_(text), resolve_(resolve) {}

  DivisorClass parse() {
    DivisorClass result = parse_sum();
    skip_ws();
    if (pos_ != text_.size())
      throw InvalidInputError("trailing input in expression '" + text_ + "'");
    return result;
  }

private:
  DivisorClass parse_sum() {
    Rational sign = 1;
    skip_ws();
    if (peek() == '-') { sign = -1; ++pos_; }
    else if (peek() == '+') { ++pos_; }
    DivisorClass acc = sign * parse_term();
    while (true) {
      skip_ws();
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        acc = acc + (c == '-' ? Rational(-1) : Rational(1)) * parse_term();
      } else {
        return acc;
      }
    }
  }

  // term := [rational ['*']] (identifier | '(' sum ')')
  DivisorClass parse_term() {
    skip_ws();
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_number();
      skip_ws();
      if (peek() == '*') { ++pos_; skip_ws(); }
    }
    if (peek() == '(') {
      ++pos_;
      DivisorClass inner = parse_sum();
      skip_ws();
      if (peek() != ')') throw InvalidInputError("missing ')' in expression '" + text_ + "'");
      ++pos_;
      return coeff * inner;
    }
    return coeff * resolve_(parse_identifier());
  }

  Rational parse_number() {
    Integer num = parse_integer();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const Integer den = parse_integer();
      if (den == 0) throw InvalidInputError("zero denominator in expression '" + text_ + "'");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Integer parse_integer() {
    skip_ws();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
    if (digits.empty()) throw InvalidInputError("expected a number in expression '" + text_ + "'");
    return Integer(digits);
  }

  std::string parse_identifier() {
    skip_ws();
    std::string name;
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
      throw InvalidInputError("expected a name in expression '" + text_ + "'");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
      name += text_[pos_++];
    return name;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  const std::string& text_;
  const NameResolver& resolve_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Evaluates a linear expression in named classes, e.g.
/// "3h - e1 - e2" or "-F + E1 + E2 + 2(E3 + E4)" or "3/8 F1 + 5/14 F2".
/// Identifier lookup is delegated to the resolver.
inline DivisorClass evaluate_expression(const std::string& text, const NameResolver& resolve) {
  return detail::ExprParser(text, resolve).parse();
}

} // namespace surfcalc
