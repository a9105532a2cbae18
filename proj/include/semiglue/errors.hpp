#pragma once

#include <stdexcept>
#include <string>

namespace semiglue {

// Malformed input or a violated domain invariant (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search bound, box, or deadline was too small to certify the answer
// (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency failure of an algorithm (should never fire on valid input).
class AlgebraError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace semiglue
