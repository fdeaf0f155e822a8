#pragma once

#include <stdexcept>
#include <string>

namespace pq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or iteration cap was hit before an answer was known.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A self-check failed. Carries the id of the stage that failed.
class VerificationFailure : public Error {
 public:
  VerificationFailure(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Malformed textual input. `where` names the line or field at fault.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace pq
