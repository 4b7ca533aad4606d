#pragma once

#include <stdexcept>
#include <string>

namespace irreg {

/// Malformed or out-of-range input (bad vertex ids, parse failures, unknown names).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but violates an operation's precondition
/// (e.g. a tree formula applied to a cyclic graph).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request exceeds a hard implementation cap (canonical forms, enumeration sizes).
class CapabilityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Iterative numerics that failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace irreg
