#pragma once

#include <stdexcept>
#include <string>

namespace inctab {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input. Carries a 1-based line and column when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                       : what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A well-formed value that breaks a domain invariant (non-increasing filling, entry > q, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured step or instance budget ran out before the computation finished.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Something the theory says cannot happen did happen. The message names the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace inctab
