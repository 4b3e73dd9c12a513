#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resetkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: out-of-range states or letters, mismatched sets, bad
/// gadget inputs.
class InputError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  MalformedHeader,
  MalformedLine,
  IncompleteTable,
  DuplicateTransition,
  IndexOutOfRange,
};

class ParseError : public InputError {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// A search ran into its configured resource cap (subset budget, brute-force
/// variable cap, DPLL decision limit).
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The external SAT solver crashed or produced unreadable output.
class OracleFailure : public Error {
 public:
  using Error::Error;
};

/// Oracle answers contradict each other (e.g. no letter extends a prefix
/// that the oracle previously declared extendable).
class OracleInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace resetkit
