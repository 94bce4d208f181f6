#pragma once

#include <stdexcept>
#include <string>

namespace arcnest {

// Bad input: malformed words, out-of-range parameters, invalid diagrams.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configurable size guard refused the request (enumeration cap, state cap,
// determinant dimension cap).
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result violated an invariant that the construction guarantees. Always a
// bug; never repaired silently.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arcnest
