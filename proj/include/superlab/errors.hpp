#pragma once

#include <stdexcept>
#include <string>

namespace superlab {

/// Malformed or out-of-contract user input (parse errors, bad sessions,
/// violated preconditions such as an infinite-colength window).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
  ParseError(const std::string& msg, std::size_t position)
      : InputError(msg + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Operands living in different rings.
class ContextMismatch : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A configured guard (degree bound, ord cap, enumeration cap) was hit.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A finite-dimensionality precondition failed.
class InfiniteDimension : public InputError {
public:
  using InputError::InputError;
};

/// A theorem-level invariant failed: always an implementation bug or an
/// instance outside the supported setting.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace superlab
