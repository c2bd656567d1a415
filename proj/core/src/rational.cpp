#include "qfrob/rational.hpp"

#include <cctype>

namespace qfrob {

Rational Rational::from_string(const std::string& text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, i); };

  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_integer = [&]() -> BigInt {
    skip_ws();
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      negative = text[i] == '-';
      ++i;
    }
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw fail("expected integer");
    BigInt value(text.substr(start, i - start), 10);  // never octal
    return negative ? BigInt(-value) : value;
  };

  BigInt num = read_integer();
  skip_ws();
  if (i == text.size()) return Rational(num);
  if (text[i] != '/') throw fail("unexpected character in rational literal");
  ++i;
  BigInt den = read_integer();
  skip_ws();
  if (i != text.size()) throw fail("trailing characters in rational literal");
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace qfrob
