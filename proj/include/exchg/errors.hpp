#pragma once

#include <stdexcept>
#include <string>

namespace exchg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live on different outcome/sequence/count spaces.
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

/// A desk-scale guard (permutation cap, enumeration budget, ...) was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold for its input.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Input data is structurally invalid (bad JSON shape, unknown label, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace exchg
