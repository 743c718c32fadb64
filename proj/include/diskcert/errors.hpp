#pragma once

#include <stdexcept>
#include <string>

namespace diskcert {

// Malformed or out-of-range user input. `line()` is 0 when not tied to a line.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal consistency check failed; results must not be trusted.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// No arc exists between the requested endpoints inside the requested region.
class NoArcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A dyadic net does not separate every element of its arc.
class IncompleteNetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The boundary is not a single simple cycle.
class NoCycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diskcert
