// errors.hpp -- exception types and checked integer arithmetic shared by the library.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotwidth {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word or diagram text. `position` is a 0-based character index
/// for words and a 1-based line number for diagram files.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operation applied to a word outside the admissible set.
class InvalidWordError : public Error {
 public:
  using Error::Error;
};

/// Operation applied to a diagram that fails validation (or has the wrong
/// number of components for the operation).
class InvalidDiagramError : public Error {
 public:
  using Error::Error;
};

/// Reduction move rejected: out of range, wrong letters, or the result would
/// leave the admissible set.
class MoveError : public Error {
 public:
  using Error::Error;
};

/// Width arithmetic left the representable range. Widths grow quadratically
/// in the bridge number, so every multiplication is checked.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A search or sweep exceeded its configured node budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in width arithmetic");
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in width arithmetic");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in width arithmetic");
  }
  return r;
}

}  // namespace detail

}  // namespace knotwidth
