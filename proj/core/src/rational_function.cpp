#include "qfrob/rational_function.hpp"

namespace qfrob {
namespace {

bool multi_term(const Polynomial& p) {
  std::size_t terms = 0;
  for (const auto& c : p.coefficients()) {
    if (!c.is_zero() && ++terms > 1) return true;
  }
  return false;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial::one();
    return;
  }
  Polynomial g = Polynomial::gcd(num, den);
  if (!g.is_one()) {
    num = *Polynomial::exact_divide(num, g);
    den = *Polynomial::exact_divide(den, g);
  }
  // Monic denominator pins the representative within the q-scaling class.
  if (!den.is_monic()) {
    Rational inv = den.leading().inverse();
    num = inv * num;
    den = inv * den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction::zero();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZeroError();
  if (a.is_zero()) return RationalFunction::zero();
  if (b.is_one()) return a;
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  return RationalFunction(den_, num_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string lhs = multi_term(num_) ? "(" + num_.to_string() + ")" : num_.to_string();
  std::string rhs = multi_term(den_) ? "(" + den_.to_string() + ")" : den_.to_string();
  return lhs + " / " + rhs;
}

}  // namespace qfrob
