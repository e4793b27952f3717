#pragma once

#include <stdexcept>
#include <string>

namespace fsmaps {

/// Raised when an input violates a documented precondition or invariant.
/// The message names the violated condition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fsmaps
