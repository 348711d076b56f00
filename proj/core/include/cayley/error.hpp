#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad element literal, wrong group, out-of-range index.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// The requested operation is not implemented for this group family.
class Unsupported : public Error {
  public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionViolation : public Error {
  public:
    using Error::Error;
};

/// A search or enumeration ran out of its node budget.
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

/// An identity that is a theorem failed on concrete data. Always a bug.
class TheoremViolation : public Error {
  public:
    using Error::Error;
};

}  // namespace cayley
