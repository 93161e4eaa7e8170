#pragma once

#include <stdexcept>
#include <string>

namespace fano {

/// Raised for malformed models, violated preconditions and unparseable input.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but lies outside what the engine knows how to treat
/// (e.g. a homogeneous ambient that is not in the built-in table).
class Unsupported : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An exact computation produced an impossible value. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fano
