#include "qfrob/parse.hpp"

#include <cctype>

#include "qfrob/errors.hpp"

namespace qfrob {
namespace {

constexpr unsigned long kMaxExponent = 100000;

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  RationalFunction run() {
    RationalFunction value = expression();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return value;
  }

 private:
  RationalFunction expression() {
    RationalFunction value = term();
    while (true) {
      skip_ws();
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = factor();
    while (true) {
      skip_ws();
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RationalFunction divisor = factor();
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  RationalFunction factor() {
    skip_ws();
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    RationalFunction base = primary();
    skip_ws();
    if (accept('^')) return power(base);
    return base;
  }

  RationalFunction power(const RationalFunction& base) {
    skip_ws();
    std::size_t at = pos_;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_ws();
    if (pos_ == text_.size() || !std::isdigit(byte(pos_)))
      throw ParseError("expected integer exponent after '^'", pos_);
    BigInt exp = integer_literal();
    if (negative) throw ParseError("negative exponent", at);
    if (exp > kMaxExponent) throw ParseError("exponent too large", at);
    unsigned long e = exp.get_ui();
    // Exponentiate numerator and denominator separately; both stay canonical.
    return RationalFunction(base.numerator().pow(e), base.denominator().pow(e));
  }

  RationalFunction primary() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (std::isdigit(byte(pos_))) return RationalFunction(Rational(integer_literal()));
    if (std::isalpha(byte(pos_)) || c == '_') {
      std::size_t at = pos_;
      std::string name = identifier();
      if (name != "q") throw ParseError("unknown identifier '" + name + "'", at);
      return RationalFunction(Polynomial::variable());
    }
    if (accept('(')) {
      RationalFunction inner = expression();
      skip_ws();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  BigInt integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(byte(pos_))) ++pos_;
    // Base is pinned to 10: the default auto-detection would read a leading
    // zero as octal.
    return BigInt(text_.substr(start, pos_ - start), 10);
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(byte(pos_)) || text_[pos_] == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(byte(pos_))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned char byte(std::size_t i) const { return static_cast<unsigned char>(text_[i]); }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text) {
  return Parser(text).run();
}

Polynomial parse_polynomial(const std::string& text) {
  RationalFunction value = Parser(text).run();
  if (!value.is_polynomial())
    throw ParseError("expression is not a polynomial: " + value.to_string(), 0);
  return value.numerator();
}

Rational parse_rational(const std::string& text) {
  RationalFunction value = Parser(text).run();
  if (!value.is_constant())
    throw ParseError("expression is not a plain rational: " + value.to_string(), 0);
  return value.constant_value();
}

}  // namespace qfrob
