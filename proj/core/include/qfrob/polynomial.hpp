#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfrob/rational.hpp"

namespace qfrob {

/// Dense univariate polynomial in q over the rationals. Coefficients are
/// stored lowest degree first with no trailing zero; the empty list is the
/// zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return constant(Rational::one()); }
  static Polynomial constant(const Rational& a);
  static Polynomial variable();  // q
  /// a * q^k
  static Polynomial monomial(const Rational& a, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational::zero();
  }
  const Rational& leading() const { return c_.back(); }

  bool has_integer_coefficients() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& a, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned long k) const;
  Rational evaluate(const Rational& x) const;

  /// Quotient and remainder with deg r < deg b. Throws on zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Quotient when b divides a exactly, nullopt otherwise.
  static std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);
  /// Monic gcd (zero when both inputs are zero).
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  Polynomial make_monic() const;

  /// Canonical text form, highest degree first, explicit '*', e.g.
  /// "q^4 + 4*q^3 - q^2 - 4*q"; "0" for the zero polynomial. Output parses
  /// back to the same polynomial.
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace qfrob
