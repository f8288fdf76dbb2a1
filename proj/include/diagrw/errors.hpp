#pragma once

#include <stdexcept>
#include <string>

namespace diagrw {

/// Interface lengths or tensor arities do not line up.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator label has no tensor at the requested size.
class InterpretationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A name in a theory or proof script does not resolve.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diagrw
