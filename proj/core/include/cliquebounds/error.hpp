#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquebounds {

// A documented precondition of a library operation did not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact oracle was asked for an instance above its vertex cap.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One of the proven inequalities failed. This always means a bug in this
// library, never a counterexample.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Bad generator name or parameters.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cliquebounds
