#pragma once

#include <stdexcept>
#include <string>

namespace tfp {

/// Malformed input: bad files, bad syntax, mismatched dimensions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value is outside the domain where a formula applies.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tfp
