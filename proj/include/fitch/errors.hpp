#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fitch {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation (unknown label,
// foreign vertex, unsupported size, mismatched label sets).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A tree or set family violates a structural requirement.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A documented precondition on the input was not met, e.g. building the
// least-resolved tree of a relation that is not Fitch.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Two independently proven routes disagreed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input. `position` is a byte offset for Newick and
// JSON syntax errors and a 1-based line number for edge lists.
class ParseError : public Error {
 public:
  enum class Unit { byte, line, element };

  ParseError(const std::string& what, Unit unit, std::size_t position)
      : Error(what), unit_(unit), position_(position) {}

  Unit unit() const { return unit_; }
  std::size_t position() const { return position_; }

 private:
  Unit unit_;
  std::size_t position_;
};

}  // namespace fitch
