#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idbg {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// API misuse: out-of-range level, unknown category, duplicate id, and so on.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `line()` is the 1-based position of the first
/// bad line, or 0 when no position applies.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// File or channel I/O failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Signals a failed assertion to the caller (FailurePolicy::RaiseToCaller).
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

/// Requests termination of the calling task (FailurePolicy::StopCurrentTask).
/// Task runners are expected to let this propagate to the task boundary and
/// end the task there.
class TaskStopRequest : public Error {
 public:
  using Error::Error;
};

}  // namespace idbg
