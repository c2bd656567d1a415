#pragma once

#include <string>
#include <variant>

#include "qfrob/field.hpp"

namespace qfrob {

enum class FieldKind {
  Rationals,          // Q
  RationalFunctions,  // Q(q)
};

std::string field_kind_name(FieldKind kind);
FieldKind field_kind_from_name(const std::string& name);  // "Q" or "Q(q)" / "Qq"

/// Runtime-tagged exact scalar used at file and CLI boundaries. Values from
/// different fields never mix: combining them throws FieldMismatchError.
/// Inside the engines, code is templated on the concrete field instead.
class Scalar {
 public:
  Scalar() : v_(Rational::zero()) {}
  Scalar(const Rational& a) : v_(a) {}                  // NOLINT: implicit by design
  Scalar(const RationalFunction& a) : v_(a) {}          // NOLINT: implicit by design

  static Scalar parse(const std::string& text, FieldKind kind);
  static Scalar zero(FieldKind kind);
  static Scalar one(FieldKind kind);

  FieldKind field() const {
    return std::holds_alternative<Rational>(v_) ? FieldKind::Rationals
                                                : FieldKind::RationalFunctions;
  }

  const Rational& as_rational() const;
  const RationalFunction& as_rational_function() const;

  bool is_zero() const;
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  std::variant<Rational, RationalFunction> v_;
};

/// True iff the value lies in the subring generated by 1: an integer in Q, or
/// a constant with integer value in Q(q).
bool in_integer_subring(const Scalar& a);

}  // namespace qfrob
