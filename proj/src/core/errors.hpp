#pragma once

#include <stdexcept>
#include <string>

namespace symcone {

// Input breaks a structural contract: mismatched algebras, bad sizes,
// bad indices, invalid configuration.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input lies outside the mathematical domain of the operation: not in the
// cone, eigenvalue guard violation, matrix not a product of SPD factors.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quantity that is verified on construction failed its residual check.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symcone
