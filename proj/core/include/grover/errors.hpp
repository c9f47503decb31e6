#pragma once

#include <stdexcept>
#include <string>

namespace grover {

/// Argument outside the mathematical domain of an operation (n = 0, vertex out
/// of range, a result applied outside its hypotheses).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Structurally invalid input: a connection set that is not inverse-closed,
/// a disconnected graph, a malformed edge list.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two routes that must agree did not. Always indicates a numerical or
/// programming bug, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace grover
