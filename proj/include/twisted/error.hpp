#pragma once

#include <stdexcept>
#include <string>

namespace twisted {

// Malformed caller input: out-of-range points, mismatched carriers,
// non-positive numeric parameters and the like.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A postcondition the library guarantees did not hold. Seeing one of these
// means a bug in this library, not in the caller.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

}  // namespace twisted
