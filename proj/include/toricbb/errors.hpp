#pragma once

#include <stdexcept>
#include <string>

namespace toricbb {

/// Malformed or out-of-contract input: wrong dimensions, non-extreme points,
/// inadmissible cocharacters. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem-backed cross-check failed. This always indicates a bug in the
/// library, never a property of the input. The CLI maps these to exit code 3.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace toricbb
