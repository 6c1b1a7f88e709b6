#pragma once

#include <stdexcept>
#include <string>

namespace enriques {

// Raised when caller-supplied data violates a precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an internal consistency check fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace enriques
