#pragma once

#include <stdexcept>
#include <string>

namespace madkit {

// An internal postcondition failed. Seeing one of these means a bug, not bad input.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Input exceeds a size guard of an exponential-time routine.
class GuardViolation : public std::invalid_argument {
 public:
  explicit GuardViolation(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input text; line is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace madkit
