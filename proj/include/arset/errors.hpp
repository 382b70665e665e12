#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arset {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (text syntax, names, files). The CLI maps
// these to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates an operation's mathematical precondition.
// The CLI maps these to exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::string const& what, std::size_t position)
      : InputError(what + " (at offset " + std::to_string(position) + ")"),
        detail_(what),
        position_(position) {}

  std::string const& detail() const noexcept { return detail_; }
  std::size_t        position() const noexcept { return position_; }

 private:
  std::string detail_;
  std::size_t position_;
};

class UnknownGenerator : public InputError {
 public:
  explicit UnknownGenerator(std::string const& name)
      : InputError("unknown generator '" + name + "'"), name_(name) {}

  std::string const& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DuplicateGenerator : public InputError {
 public:
  explicit DuplicateGenerator(std::string const& name)
      : InputError("duplicate generator '" + name + "'") {}
};

class MissingImage : public InputError {
 public:
  explicit MissingImage(std::string const& name)
      : InputError("no image given for generator '" + name + "'") {}
};

class BadIndex : public InputError {
 public:
  using InputError::InputError;
};

class NotSolvable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class BadExponent : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvalidCertificate : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class Condition21NotSatisfied : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class GcdNotOne : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class EmptyTuple : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class IllegalMove : public PreconditionError {
 public:
  IllegalMove(std::string const& what, std::size_t move_index)
      : PreconditionError(what + " (move " + std::to_string(move_index) + ")"),
        move_index_(move_index) {}

  std::size_t move_index() const noexcept { return move_index_; }

 private:
  std::size_t move_index_;
};

class InconsistentVerdict : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace arset
