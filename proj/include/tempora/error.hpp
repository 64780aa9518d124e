#pragma once

#include <stdexcept>
#include <string>

namespace tempora {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (term syntax, rational syntax, JSON documents).
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  explicit SyntaxError(const std::string& what) : Error(what) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

// Well-formed input that violates an algebraic precondition.
class SemanticError : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class SizeMismatch : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class NotInSubgroup : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class IndexOutOfRange : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class BoxPresent : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class NotEndo : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class VarianceError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

class InconsistentWidths : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

// Score or normal form whose parts contradict each other.
class CorruptInput : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

// A library invariant failed; always a bug.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace tempora
