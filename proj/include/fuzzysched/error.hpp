#pragma once

#include <stdexcept>
#include <string>

namespace fuzzysched {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid engine/variable/rule configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (rule DSL, CSV, JSON). Carries a 1-based source
/// position when one is known; 0 means "not applicable".
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, int line = 0, int column = 0)
      : Error(msg), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

/// Workload fails validation for the requested operation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Defuzzification requested on an identically-zero aggregate.
class NoRuleFiredError : public Error {
 public:
  using Error::Error;
};

/// A schedule is inconsistent with its workload.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or has an unrecognized format.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzysched
