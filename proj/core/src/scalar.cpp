#include "qfrob/scalar.hpp"

#include "qfrob/parse.hpp"

namespace qfrob {
namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    throw FieldMismatchError("cannot combine a " + field_kind_name(a.field()) +
                             " scalar with a " + field_kind_name(b.field()) + " scalar");
}

}  // namespace

std::string field_kind_name(FieldKind kind) {
  return kind == FieldKind::Rationals ? "Q" : "Q(q)";
}

FieldKind field_kind_from_name(const std::string& name) {
  if (name == "Q") return FieldKind::Rationals;
  if (name == "Q(q)" || name == "Qq") return FieldKind::RationalFunctions;
  throw Error("unknown field '" + name + "' (expected Q or Q(q))");
}

Scalar Scalar::parse(const std::string& text, FieldKind kind) {
  if (kind == FieldKind::Rationals) return Scalar(parse_rational(text));
  return Scalar(parse_rational_function(text));
}

Scalar Scalar::zero(FieldKind kind) {
  return kind == FieldKind::Rationals ? Scalar(Rational::zero())
                                      : Scalar(RationalFunction::zero());
}

Scalar Scalar::one(FieldKind kind) {
  return kind == FieldKind::Rationals ? Scalar(Rational::one())
                                      : Scalar(RationalFunction::one());
}

const Rational& Scalar::as_rational() const {
  if (!std::holds_alternative<Rational>(v_))
    throw FieldMismatchError("scalar is not a plain rational");
  return std::get<Rational>(v_);
}

const RationalFunction& Scalar::as_rational_function() const {
  if (!std::holds_alternative<RationalFunction>(v_))
    throw FieldMismatchError("scalar is not a rational function");
  return std::get<RationalFunction>(v_);
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

#define QFROB_SCALAR_BINOP(op)                                       \
  Scalar operator op(const Scalar& a, const Scalar& b) {             \
    require_same_field(a, b);                                        \
    if (a.field() == FieldKind::Rationals)                           \
      return Scalar(std::get<Rational>(a.v_) op std::get<Rational>(b.v_)); \
    return Scalar(std::get<RationalFunction>(a.v_)                   \
                      op std::get<RationalFunction>(b.v_));          \
  }

QFROB_SCALAR_BINOP(+)
QFROB_SCALAR_BINOP(-)
QFROB_SCALAR_BINOP(*)
QFROB_SCALAR_BINOP(/)

#undef QFROB_SCALAR_BINOP

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) return false;
  return a.v_ == b.v_;
}

bool in_integer_subring(const Scalar& a) {
  if (a.field() == FieldKind::Rationals) return in_integer_subring(a.as_rational());
  return in_integer_subring(a.as_rational_function());
}

}  // namespace qfrob
