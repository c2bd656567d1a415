#pragma once

#include <string>
#include <utility>

#include "qfrob/polynomial.hpp"

namespace qfrob {

/// Element of the fraction field of Q[q] in canonical form: the denominator
/// is monic, gcd(numerator, denominator) = 1, and zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::one()) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial::one()) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(const Rational& a) : num_(Polynomial::constant(a)),
                                                 den_(Polynomial::one()) {}

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(Polynomial::one()); }
  static RationalFunction from_int(long n) { return RationalFunction(Rational(n)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational constant_value() const { return num_.coefficient(0); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form makes this structural
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  RationalFunction inverse() const;

  /// "<numerator> / <denominator>", each side parenthesized when it has more
  /// than one term; bare numerator when the denominator is 1.
  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

inline bool in_integer_subring(const RationalFunction& a) {
  return a.is_constant() && a.constant_value().is_integer();
}

}  // namespace qfrob
