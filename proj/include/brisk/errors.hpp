#pragma once

#include <stdexcept>
#include <string>

namespace brisk {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: syntax errors, unknown keys, bad field specs.
class InputError : public Error {
 public:
  InputError(const std::string& msg, int line = 0, int column = 0)
      : Error(line > 0 ? msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"
                       : msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Points and lines can only be enumerated over a prime field.
class EnumerationUnsupported : public PreconditionError {
 public:
  EnumerationUnsupported()
      : PreconditionError("enumeration unsupported over the rational field") {}
};

/// The algebra is not special although a special algebra was required.
class NotSpecialError : public Error {
 public:
  using Error::Error;
};

/// Isomorphism search could not decide.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed, or a proven identity failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InvariantViolation(msg);
}

}  // namespace brisk
