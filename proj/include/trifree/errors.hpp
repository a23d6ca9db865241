#pragma once

#include <stdexcept>
#include <string>

namespace trifree {

/// Violated precondition on an argument (bad vertex, bad probability, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Derived constants fall outside their admissible range (e.g. p' > 1).
class ParameterError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Input exceeds the size an exact/exhaustive routine is allowed to handle.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ArgumentError(message);
}

}  // namespace trifree
