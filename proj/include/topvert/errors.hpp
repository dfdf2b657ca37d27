#pragma once

#include <stdexcept>
#include <string>

namespace topvert {

/// A requested coefficient lies outside the range a series is known on.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvertible : public std::runtime_error {
 public:
  NotInvertible() : std::runtime_error("non-invertible") {}
};

/// Malformed user input (partition strings, flag values).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace topvert
