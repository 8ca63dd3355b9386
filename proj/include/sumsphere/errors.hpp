#pragma once

#include <stdexcept>
#include <string>

namespace sumsphere {

/// Two values that must share a group were built over different groups.
class GroupMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument is outside the domain of an operation (empty set, negative order, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation exists but does not support this input (e.g. units of a non-cyclic group).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A textual literal could not be parsed. `token()` names the offending piece.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what + ": '" + token + "'"), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// A verification produced a result that contradicts a proven inequality.
class InternalInconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sumsphere
