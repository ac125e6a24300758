#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

/// Malformed textual input (CLI arguments, JSON expressions).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A size guard was exceeded (maximum order, Bell-number ceiling, oracle
/// sample size).
class GuardViolation : public std::length_error {
 public:
  explicit GuardViolation(const std::string& what) : std::length_error(what) {}
};

}  // namespace umbral
