#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (spinor literals, CLI values).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size or step limit would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spectral projectors requested at the degenerate point k = 0.
class DegeneracyError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A fit or analysis step did not have enough data to be meaningful.
class DiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qwalk
