#pragma once

#include <stdexcept>
#include <string>

namespace trinb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An alternative or antichain does not conform to the shape it is used with.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input outside its domain (non-linear
/// partition, non-antichain, non-binary attribute, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search ran out of its evaluation or time budget.
/// Never means "no solution exists".
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace trinb
