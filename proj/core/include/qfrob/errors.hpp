#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfrob {

/// Base class for all qfrob errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Division by an exact zero (rational, polynomial or rational function).
class DivisionByZeroError : public Error {
 public:
  explicit DivisionByZeroError(const std::string& msg = "division by zero") : Error(msg) {}
};

/// Two scalars from different coefficient fields were combined.
class FieldMismatchError : public Error {
 public:
  explicit FieldMismatchError(const std::string& msg = "scalars belong to different fields")
      : Error(msg) {}
};

/// Expression parsing failure; `position` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The iterated vectors do not span the whole space.
class NotWideError : public Error {
 public:
  explicit NotWideError(const std::string& msg = "algebra is not wide") : Error(msg) {}
};

/// The genus pairing is degenerate, so handle-element division is undefined.
class DegenerateFormError : public Error {
 public:
  explicit DegenerateFormError(const std::string& msg = "bilinear form is degenerate")
      : Error(msg) {}
};

/// Recurrence extraction failure.
class ExtractionError : public Error {
 public:
  enum class Kind {
    InsufficientData,  // no order certifies within the provided window
    Inconsistent,      // a candidate recurrence was violated by later values
  };

  ExtractionError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Group construction failure: the violated axiom with a witness.
class NotAGroupError : public Error {
 public:
  explicit NotAGroupError(const std::string& msg) : Error(msg) {}
};

/// Permutation closure exceeded the configured bound.
class ClosureBoundError : public Error {
 public:
  explicit ClosureBoundError(const std::string& msg) : Error(msg) {}
};

/// An internal cross-check failed: a bug or a broken invariant, never bad
/// input.
class CrossCheckError : public Error {
 public:
  explicit CrossCheckError(const std::string& msg) : Error(msg) {}
};

}  // namespace qfrob
