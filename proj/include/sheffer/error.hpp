#pragma once

#include <stdexcept>
#include <string>

namespace sheffer {

/// Bad user input: malformed rational, unknown family, missing parameter.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the family name is not in the catalog.
class UnknownFamily : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A precondition of an operation was violated by the caller (order
/// mismatch, non-delta series, insufficient truncation order, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sheffer
