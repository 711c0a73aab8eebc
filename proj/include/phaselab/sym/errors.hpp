#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phaselab::sym {

class SymbolicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position()` is the byte offset of the offending token.
class ParseError : public SymbolicError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : SymbolicError(what + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownIdentifierError : public ParseError {
 public:
  UnknownIdentifierError(const std::string& name, std::size_t position)
      : ParseError("unknown identifier '" + name + "'", position), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// An operation mixed primed and unprimed atoms.
class FrameError : public SymbolicError {
 public:
  using SymbolicError::SymbolicError;
};

/// A complex field (Psi, PsiC) reached an operation that requires real atoms.
class ComplexAtomError : public SymbolicError {
 public:
  using SymbolicError::SymbolicError;
};

class ZeroCofactorError : public SymbolicError {
 public:
  using SymbolicError::SymbolicError;
};

/// Division or negative power by something other than a nonzero parameter monomial.
class DomainError : public SymbolicError {
 public:
  using SymbolicError::SymbolicError;
};

}  // namespace phaselab::sym
