#pragma once

#include <stdexcept>
#include <string>

namespace monoid_ramsey {

// A caller-side precondition failed: bad arguments, malformed input files,
// words that are too short, mismatched dimensions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well-formed but exceeds a configured resource guard.
class ResourceRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal contract was violated; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monoid_ramsey
