#pragma once

#include <concepts>
#include <string>

#include "qfrob/rational.hpp"
#include "qfrob/rational_function.hpp"

namespace qfrob {

/// Exact field surface shared by Rational and RationalFunction. Every value
/// is immutable-after-construction and in canonical form, so equality is
/// structural and all operations are pure.
template <typename F>
concept ExactField = requires(const F a, const F b) {
  { F() };
  { F::zero() } -> std::convertible_to<F>;
  { F::one() } -> std::convertible_to<F>;
  { F::from_int(0L) } -> std::convertible_to<F>;
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a* b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { in_integer_subring(a) } -> std::convertible_to<bool>;
};

static_assert(ExactField<Rational>);
static_assert(ExactField<RationalFunction>);

template <ExactField F>
const char* field_name();

template <>
inline const char* field_name<Rational>() {
  return "Q";
}

template <>
inline const char* field_name<RationalFunction>() {
  return "Q(q)";
}

}  // namespace qfrob
